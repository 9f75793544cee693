#include "osci/moments.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "osci/banded.hpp"
#include "osci/error.hpp"

namespace osci::moments {
namespace {

constexpr cplx kI{0.0, 1.0};

bool seven_term(const ProblemParams& p, RecurrenceForm form) {
  switch (form) {
    case RecurrenceForm::automatic: return p.degenerate();
    case RecurrenceForm::nine_term: return false;
    case RecurrenceForm::seven_term:
      if (!p.degenerate()) {
        throw DomainError(Stage::recurrence, "seven-term recurrence requires omega == 2k");
      }
      return true;
  }
  return false;
}

int reach(bool seven) { return seven ? 3 : 4; }

void require_known(std::span<const cplx> known) {
  if (known.size() < 5) throw DomainError(Stage::recurrence, "need at least M(0..4)");
}

double row_scale(const RecurrenceCoeffs& c) {
  double s = 0.0;
  for (const cplx& v : c.c) s = std::max(s, std::abs(v));
  return s;
}

// Largest root modulus of the frozen-coefficient characteristic polynomial of row n.
double dominant_root(const RecurrenceCoeffs& c, bool seven) {
  const int r = reach(seven);
  const int deg = 2 * r;
  const cplx lead = c.at(r);
  if (std::abs(lead) <= 1e-14 * row_scale(c)) return std::numeric_limits<double>::infinity();
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  // z^deg = -sum_{q<deg} (a_q / lead) z^q with a_q the coefficient of M(n - r + q).
  for (int q = 0; q < deg; ++q) comp(q, deg - 1) = -c.at(q - r) / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

MomentTable make_table(const ProblemParams& p, std::vector<cplx> values) {
  MomentTable t{p, std::move(values), {}, 0.0};
  t.regime.assign(t.values.size(), Regime::starting);
  return t;
}

// Solves the rows n = L-1..E-2 for M(L+1..E) with M(E+1..) from tail.
std::vector<cplx> solve_endpoint(const ProblemParams& p, std::span<const cplx> known, int E,
                                 std::span<const cplx> tail, const RowSource& rhs, bool seven) {
  const int L = static_cast<int>(known.size()) - 1;
  const int n_unknown = E - L;
  if (n_unknown < 1) throw DomainError(Stage::recurrence, "endpoint must exceed the known range");
  const int r = reach(seven);
  banded::BandedMatrix A(n_unknown, 6, 2);
  std::vector<cplx> b(n_unknown, cplx{0.0, 0.0});
  for (int i = 0; i < n_unknown; ++i) {
    const int n = L - 1 + i;
    const RecurrenceCoeffs c = recurrence_coeffs(p, n);
    const double scale = 1.0 / row_scale(c);
    if (rhs) b[i] += rhs(n) * scale;
    for (int off = -r; off <= r; ++off) {
      const cplx coef = c.at(off) * scale;
      const int m = n + off;
      const int am = m < 0 ? -m : m;
      if (am <= L) {
        b[i] -= coef * known[am];
      } else if (m <= E) {
        A(i, m - L - 1) += coef;
      } else {
        const int t = m - E - 1;
        if (t >= static_cast<int>(tail.size())) {
          throw DomainError(Stage::recurrence, "tail values do not cover the recurrence reach");
        }
        b[i] -= coef * tail[t];
      }
    }
  }
  banded::BandedLU lu(std::move(A));
  lu.solve(b);
  std::vector<cplx> out(known.begin(), known.end());
  out.insert(out.end(), b.begin(), b.end());
  for (const cplx& v : out) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw SingularError(Stage::recurrence, "boundary-value solve produced non-finite moments");
    }
  }
  return out;
}

}  // namespace

RecurrenceCoeffs recurrence_coeffs(const ProblemParams& p, int n_int) {
  const double a = p.alpha();
  const double b = p.beta();
  const double nu = p.nu().value();
  const double k = p.k();
  const double w = p.omega();
  const cplx ik = kI * k;

  auto f1 = [&](double n) { return ik * (a + b + n + 4.0) - ik / 2.0; };
  auto f2 = [&](double n) {
    return 9.0 + 6.0 * (a + b + n) + k * k + n * n + a * a + b * b - w * w / 4.0 - nu * nu +
           2.0 * (a * b + a * n + b * n) + ik * (1.0 - 2.0 * a + 2.0 * b);
  };
  auto f3 = [&](double n) {
    return 2.0 * n - 8.0 * a + 12.0 * b +
           4.0 * (1.0 - ik * a - ik * b + nu * nu + b * n - a * n) - 15.5 * ik +
           3.0 * ik * (a + b - n + 4.0) + 4.0 * (b * b - a * a);
  };
  auto f4 = [&](double n) {
    return 6.0 + 4.0 * a + 12.0 * b - 4.0 * a * b - 2.0 * ik + 4.0 * ik * (a - b) +
           0.375 * w * w - 1.5 * k * k + 6.0 * (a * a + b * b - nu * nu) - 2.0 * n * n;
  };

  const double n = n_int;
  const cplx c4 = p.degenerate() ? cplx{0.0, 0.0} : cplx{w * w / 16.0 - k * k / 4.0, 0.0};
  return {{c4, f1(n), f2(n), f3(n), f4(n), f3(-n), f2(-n), f1(-n), c4}};
}

RecurrenceCoeffs recurrence_coeff_derivatives(const ProblemParams& p, int n_int,
                                              CoeffDerivative d) {
  const double a = p.alpha();
  const double b = p.beta();
  const cplx ik = kI * p.k();
  const double n = n_int;
  const cplx zero{0.0, 0.0};
  switch (d) {
    case CoeffDerivative::alpha: {
      auto d2 = [&](double m) { return 6.0 + 2.0 * a + 2.0 * b + 2.0 * m - 2.0 * ik; };
      auto d3 = [&](double m) { return -8.0 - 4.0 * m - 8.0 * a - ik; };
      const cplx d4 = 4.0 - 4.0 * b + 4.0 * ik + 12.0 * a;
      return {{zero, ik, d2(n), d3(n), d4, d3(-n), d2(-n), ik, zero}};
    }
    case CoeffDerivative::beta: {
      auto d2 = [&](double m) { return 6.0 + 2.0 * a + 2.0 * b + 2.0 * m + 2.0 * ik; };
      auto d3 = [&](double m) { return 12.0 + 4.0 * m + 8.0 * b - ik; };
      const cplx d4 = 12.0 - 4.0 * a - 4.0 * ik + 12.0 * b;
      return {{zero, ik, d2(n), d3(n), d4, d3(-n), d2(-n), ik, zero}};
    }
    case CoeffDerivative::alpha_beta:
      return {{zero, zero, 2.0, zero, -4.0, zero, 2.0, zero, zero}};
  }
  return {};
}

int MomentTable::count(Regime r) const {
  return static_cast<int>(std::count(regime.begin(), regime.end(), r));
}

double row_residual(const ProblemParams& p, int n, const std::function<cplx(int)>& moment,
                    const RowSource& rhs) {
  const RecurrenceCoeffs c = recurrence_coeffs(p, n);
  cplx sum = rhs ? -rhs(n) : cplx{0.0, 0.0};
  double mag = rhs ? std::abs(rhs(n)) : 0.0;
  for (int off = -4; off <= 4; ++off) {
    const cplx t = c.at(off) * moment(n + off);
    sum += t;
    mag += std::abs(t);
  }
  return mag == 0.0 ? 0.0 : std::abs(sum) / mag;
}

int tail_width(const ProblemParams& p, RecurrenceForm form) { return seven_term(p, form) ? 1 : 2; }

MomentTable forward_recursion(const ProblemParams& p, std::span<const cplx> known, int n_target,
                              const RowSource& rhs) {
  require_known(known);
  const int L = static_cast<int>(known.size()) - 1;
  if (n_target <= L) {
    return make_table(p, std::vector<cplx>(known.begin(), known.begin() + std::max(n_target, 0) + 1));
  }
  if (n_target > std::floor(p.stability_threshold())) {
    throw DomainError(Stage::recurrence,
                      "forward recursion target " + std::to_string(n_target) +
                          " exceeds the stability threshold k + omega/2; use the boundary-value solve");
  }
  const bool seven = p.degenerate();
  const int r = reach(seven);
  std::vector<cplx> M(known.begin(), known.end());
  M.reserve(n_target + 1);
  double worst = 1.0;
  for (int m = L + 1; m <= n_target; ++m) {
    const int n = m - r;
    const RecurrenceCoeffs c = recurrence_coeffs(p, n);
    const cplx lead = c.at(r);
    if (std::abs(lead) < 1e-14 * row_scale(c)) {
      throw SingularError(Stage::recurrence,
                          "degenerate leading coefficient at n = " + std::to_string(n));
    }
    cplx acc = rhs ? rhs(n) : cplx{0.0, 0.0};
    double mag = std::abs(acc);
    for (int off = -r; off < r; ++off) {
      const int idx = std::abs(n + off);
      const cplx t = c.at(off) * M[idx];
      acc -= t;
      mag += std::abs(t);
    }
    M.push_back(acc / lead);
    if (std::abs(acc) > 0.0) worst = std::max(worst, mag / std::abs(acc));
  }
  MomentTable t = make_table(p, std::move(M));
  for (int i = L + 1; i <= n_target; ++i) t.regime[i] = Regime::forward;
  t.est_accuracy = 64.0 * std::numeric_limits<double>::epsilon() * worst;
  return t;
}

MomentTable fixed_endpoint_solve(const ProblemParams& p, std::span<const cplx> known, int endpoint,
                                 std::span<const cplx> tail, const RowSource& rhs,
                                 RecurrenceForm form) {
  require_known(known);
  const bool seven = seven_term(p, form);
  if (static_cast<int>(tail.size()) < (seven ? 1 : 2)) {
    throw DomainError(Stage::recurrence, "not enough tail values for the recurrence form");
  }
  MomentTable t = make_table(p, solve_endpoint(p, known, endpoint, tail, rhs, seven));
  for (std::size_t i = known.size(); i < t.regime.size(); ++i) t.regime[i] = Regime::bvp;
  return t;
}

MomentTable bvp_solve(const ProblemParams& p, std::span<const cplx> known, int n_max,
                      const BvpOptions& opts, const RowSource& rhs) {
  require_known(known);
  if (!(opts.tol > 0.0)) throw DomainError(Stage::recurrence, "bvp tolerance must be positive");
  const int L = static_cast<int>(known.size()) - 1;
  if (n_max <= L) {
    return make_table(p, std::vector<cplx>(known.begin(), known.begin() + std::max(n_max, 0) + 1));
  }
  const bool seven = seven_term(p, opts.form);
  const std::vector<cplx> zeros(2, cplx{0.0, 0.0});
  const double thr = p.stability_threshold();
  const int base = std::max(n_max, static_cast<int>(std::ceil(thr)));
  int margin = std::max(16, static_cast<int>(std::ceil(0.5 * thr)));
  const double cap = opts.cap_factor * (n_max + p.k() + p.omega());

  auto endpoint_ok = [&](int E) {
    return E <= cap && (opts.max_endpoint < 0 || E <= opts.max_endpoint);
  };
  if (!endpoint_ok(base + margin)) {
    throw ConvergenceError(Stage::recurrence, "initial boundary-value endpoint exceeds the cap");
  }
  std::vector<cplx> prev = solve_endpoint(p, known, base + margin, zeros, rhs, seven);
  double change = std::numeric_limits<double>::infinity();
  std::vector<cplx> cur;
  for (;;) {
    margin *= 2;
    const int E = base + margin;
    if (!endpoint_ok(E)) {
      throw ConvergenceError(Stage::recurrence,
                             "boundary-value endpoint reached its cap before the moments settled "
                             "(last relative change " + std::to_string(change) + ")");
    }
    cur = solve_endpoint(p, known, E, zeros, rhs, seven);
    double diff = 0.0;
    double mag = 0.0;
    for (int i = 0; i <= n_max; ++i) {
      diff = std::max(diff, std::abs(cur[i] - prev[i]));
      mag = std::max(mag, std::abs(cur[i]));
    }
    change = mag > 0.0 ? diff / mag : diff;
    if (change < opts.tol) break;
    prev = std::move(cur);
  }
  cur.resize(n_max + 1);
  MomentTable t = make_table(p, std::move(cur));
  for (int i = L + 1; i <= n_max; ++i) t.regime[i] = Regime::bvp;
  t.est_accuracy = change;
  return t;
}

int forward_limit(const ProblemParams& p, int n_max, const RecurrenceOptions& opts) {
  if (!(opts.forward_safety > 0.0 && opts.forward_safety <= 1.0)) {
    throw DomainError(Stage::recurrence, "forward_safety must lie in (0, 1]");
  }
  const int hi = std::min<double>(n_max, std::floor(opts.forward_safety * p.stability_threshold()));
  const bool seven = p.degenerate();
  double growth = 1.0;
  int lim = 4;
  for (int m = 5; m <= hi; ++m) {
    growth *= std::max(1.0, dominant_root(recurrence_coeffs(p, m - reach(seven)), seven));
    if (!(growth <= opts.max_amplification)) break;
    lim = m;
  }
  return lim;
}

MomentTable compute_moments(const ProblemParams& p, const std::array<cplx, 5>& start, int n_max,
                            const RecurrenceOptions& opts, const RowSource& rhs) {
  const double res = row_residual(p, 0, [&](int m) { return start[std::abs(m)]; }, rhs);
  if (!(res <= opts.start_residual_tol)) {
    throw AccuracyError(Stage::starting_moments,
                        "starting moments violate the n = 0 recurrence row (relative residual " +
                            std::to_string(res) + ")");
  }
  const int L = forward_limit(p, n_max, opts);
  if (n_max <= L) return forward_recursion(p, start, n_max, rhs);
  MomentTable head = forward_recursion(p, start, L, rhs);
  // The boundary-value part is anchored on M(0..4) only: forward values near L
  // already carry the amplified rounding error and would seed it into the tail.
  MomentTable t = bvp_solve(p, start, n_max, opts.bvp, rhs);
  for (int i = 0; i <= L; ++i) {
    t.values[i] = head.values[i];
    t.regime[i] = head.regime[i];
  }
  t.est_accuracy = std::max(t.est_accuracy, head.est_accuracy);
  return t;
}

}  // namespace osci::moments
