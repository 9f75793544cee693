#include "osci/quadrature_rules.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "osci/error.hpp"

namespace osci::quad {
namespace {

// Monic three-term recurrence pi_{j+1} = (x - alpha_j) pi_j - beta_j pi_{j-1};
// beta holds beta_1..beta_n, so it has one more entry than the matrix needs.
struct Recurrence {
  std::vector<double> alpha;
  std::vector<double> beta;
  double mu0 = 0.0;
};

void require_points(int n) {
  if (n < 1) throw DomainError(Stage::quadrature_rule, "quadrature rule needs n >= 1");
}

Recurrence jacobi_recurrence(double a, double b, int n) {
  Recurrence r;
  r.alpha.resize(n);
  r.beta.resize(n);
  const double ab = a + b;
  for (int j = 0; j < n; ++j) {
    if (j == 0) {
      r.alpha[j] = (b - a) / (ab + 2.0);
    } else {
      const double t = 2.0 * j + ab;
      r.alpha[j] = (b * b - a * a) / (t * (t + 2.0));
    }
  }
  for (int j = 1; j <= n; ++j) {
    const double t = 2.0 * j + ab;
    if (j == 1) {
      r.beta[0] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      r.beta[j - 1] = 4.0 * j * (j + a) * (j + b) * (j + ab) / (t * t * (t + 1.0) * (t - 1.0));
    }
  }
  r.mu0 = std::exp((ab + 1.0) * std::numbers::ln2 + std::lgamma(a + 1.0) +
                   std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  return r;
}

Recurrence laguerre_recurrence(double gamma, int n) {
  Recurrence r;
  r.alpha.resize(n);
  r.beta.resize(n);
  for (int j = 0; j < n; ++j) r.alpha[j] = 2.0 * j + gamma + 1.0;
  for (int j = 1; j <= n; ++j) r.beta[j - 1] = j * (j + gamma);
  r.mu0 = std::tgamma(gamma + 1.0);
  return r;
}

// Evaluates the orthonormal polynomials at x. Returns (p_n, p_n', sum_{j<n} p_j^2).
struct OrthoEval {
  double pn;
  double dpn;
  double sumsq;
};

OrthoEval eval_orthonormal(const Recurrence& r, int n, double x) {
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(r.mu0);
  double d_prev = 0.0;
  double d = 0.0;
  double sumsq = 0.0;
  double b_prev = 0.0;
  for (int j = 0; j < n; ++j) {
    sumsq += p * p;
    const double b_next = std::sqrt(r.beta[j]);
    const double p_next = ((x - r.alpha[j]) * p - b_prev * p_prev) / b_next;
    const double d_next = (p + (x - r.alpha[j]) * d - b_prev * d_prev) / b_next;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    b_prev = b_next;
  }
  return {p, d, sumsq};
}

Rule golub_welsch(const Recurrence& r, int n) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int j = 0; j < n; ++j) diag[j] = r.alpha[j];
  for (int j = 0; j + 1 < n; ++j) sub[j] = std::sqrt(r.beta[j]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError(Stage::quadrature_rule,
                           "Golub-Welsch eigenproblem did not converge (n=" + std::to_string(n) + ")");
  }

  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      const OrthoEval e = eval_orthonormal(r, n, x);
      if (e.dpn == 0.0) break;
      const double step = e.pn / e.dpn;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::abs(x)) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / eval_orthonormal(r, n, x).sumsq;
  }
  return rule;
}

}  // namespace

Rule gauss_legendre(int n) {
  require_points(n);
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-17) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

Rule gauss_jacobi(double a, double b, int n) {
  require_points(n);
  if (!(a > -1.0) || !(b > -1.0)) {
    throw DomainError(Stage::quadrature_rule, "Gauss-Jacobi exponents must exceed -1");
  }
  return golub_welsch(jacobi_recurrence(a, b, n), n);
}

Rule gauss_laguerre(double gamma, int n) {
  require_points(n);
  if (!(gamma > -1.0)) {
    throw DomainError(Stage::quadrature_rule, "generalized Gauss-Laguerre needs gamma > -1");
  }
  return golub_welsch(laguerre_recurrence(gamma, n), n);
}

Rule left_weighted_unit_rule(double power, int n) {
  Rule rule = gauss_jacobi(0.0, power, n);
  const double scale = std::pow(2.0, -power - 1.0);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = 0.5 * (1.0 + rule.nodes[i]);
    rule.weights[i] *= scale;
  }
  return rule;
}

namespace {

enum class Family { legendre, jacobi, laguerre };
using Key = std::tuple<Family, double, double, int>;

class RuleCache {
 public:
  template <class Make>
  std::shared_ptr<const Rule> get(const Key& key, Make&& make) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = rules_.find(key); it != rules_.end()) return it->second;
    }
    auto rule = std::make_shared<const Rule>(make());
    std::unique_lock lock(mutex_);
    if (rules_.size() > kMaxEntries) rules_.clear();
    return rules_.emplace(key, std::move(rule)).first->second;
  }

 private:
  static constexpr std::size_t kMaxEntries = 4096;
  std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const Rule>> rules_;
};

RuleCache& cache() {
  static RuleCache instance;
  return instance;
}

}  // namespace

std::shared_ptr<const Rule> cached_gauss_legendre(int n) {
  return cache().get({Family::legendre, 0.0, 0.0, n}, [n] { return gauss_legendre(n); });
}

std::shared_ptr<const Rule> cached_gauss_jacobi(double a, double b, int n) {
  return cache().get({Family::jacobi, a, b, n}, [=] { return gauss_jacobi(a, b, n); });
}

std::shared_ptr<const Rule> cached_gauss_laguerre(double gamma, int n) {
  return cache().get({Family::laguerre, gamma, 0.0, n}, [=] { return gauss_laguerre(gamma, n); });
}

}  // namespace osci::quad
