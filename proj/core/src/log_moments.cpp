#include "osci/log_moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "osci/error.hpp"

namespace osci::moments {
namespace {

void require(const MomentTable* t, const char* what) {
  if (t == nullptr) {
    throw DomainError(Stage::recurrence, std::string("log moments: missing ") + what + " table");
  }
}

cplx apply(const RecurrenceCoeffs& d, const MomentTable& t, int n) {
  cplx acc{0.0, 0.0};
  for (int off = -4; off <= 4; ++off) {
    const cplx c = d.at(off);
    if (c == cplx{0.0, 0.0}) continue;
    const int m = std::abs(n + off);
    if (m > t.n_max()) {
      throw DomainError(Stage::recurrence,
                        "log moments: dependency table too short for row " + std::to_string(n));
    }
    acc += c * t.values[m];
  }
  return acc;
}

}  // namespace

RowSource log_moment_rhs(const ProblemParams& p, LogKind kind, const LogDependencies& deps) {
  require(deps.base, "base moment");
  switch (kind) {
    case LogKind::log_x:
      return [p, base = deps.base](int n) {
        return -apply(recurrence_coeff_derivatives(p, n, CoeffDerivative::alpha), *base, n);
      };
    case LogKind::log_1mx:
      return [p, base = deps.base](int n) {
        return -apply(recurrence_coeff_derivatives(p, n, CoeffDerivative::beta), *base, n);
      };
    case LogKind::log_both:
      require(deps.log_x, "ln(x) moment");
      require(deps.log_1mx, "ln(1-x) moment");
      return [p, deps](int n) {
        return -(apply(recurrence_coeff_derivatives(p, n, CoeffDerivative::beta), *deps.log_x, n) +
                 apply(recurrence_coeff_derivatives(p, n, CoeffDerivative::alpha), *deps.log_1mx, n) +
                 apply(recurrence_coeff_derivatives(p, n, CoeffDerivative::alpha_beta), *deps.base, n));
      };
  }
  throw DomainError(Stage::recurrence, "unknown log-moment kind");
}

MomentTable log_moment_solve(const ProblemParams& p, LogKind kind, const std::array<cplx, 5>& start,
                             const LogDependencies& deps, int n_max, const RecurrenceOptions& opts) {
  const RowSource rhs = log_moment_rhs(p, kind, deps);
  int shortest = deps.base->n_max();
  if (kind == LogKind::log_both) {
    shortest = std::min({shortest, deps.log_x->n_max(), deps.log_1mx->n_max()});
  }
  RecurrenceOptions o = opts;
  // Rows run to E - 2 and read dependencies up to row + 3.
  const int limit = shortest - 1;
  o.bvp.max_endpoint = o.bvp.max_endpoint < 0 ? limit : std::min(o.bvp.max_endpoint, limit);
  return compute_moments(p, start, n_max, o, rhs);
}

int log_dependency_length(const ProblemParams& p, int n_max) {
  const double thr = p.stability_threshold();
  const int base = std::max(n_max, static_cast<int>(std::ceil(thr)));
  const int margin = std::max(16, static_cast<int>(std::ceil(0.5 * thr)));
  return base + 8 * margin + 1;
}

}  // namespace osci::moments
