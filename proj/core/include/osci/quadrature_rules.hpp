#pragma once

// Classical Gauss rules built from three-term recurrences.
//
// Jacobi and generalized Laguerre rules come from the Golub-Welsch
// eigenproblem; nodes are then polished by Newton steps on the orthonormal
// polynomial and weights recomputed as Christoffel numbers, which keeps tiny
// weights accurate in a relative sense. Legendre rules use plain Newton
// iteration on P_n.
//
// The cached_* accessors share immutable rules between callers; the cache is
// safe under concurrent readers and writers.

#include <memory>
#include <vector>

namespace osci::quad {

struct Rule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // positive

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Gauss-Legendre on [-1, 1].
Rule gauss_legendre(int n);

/// Gauss-Jacobi on [-1, 1] with weight (1 - t)^a (1 + t)^b, a, b > -1.
Rule gauss_jacobi(double a, double b, int n);

/// Generalized Gauss-Laguerre on (0, inf) with weight x^gamma e^{-x}, gamma > -1.
Rule gauss_laguerre(double gamma, int n);

std::shared_ptr<const Rule> cached_gauss_legendre(int n);
std::shared_ptr<const Rule> cached_gauss_jacobi(double a, double b, int n);
std::shared_ptr<const Rule> cached_gauss_laguerre(double gamma, int n);

/// Maps a Gauss-Jacobi rule with (a, b) = (0, power) onto [0, 1]: the weight
/// becomes x^power and the weights are scaled accordingly.
Rule left_weighted_unit_rule(double power, int n);

}  // namespace osci::quad
