#pragma once

// Log-weighted moments
//   kind 1: int x^a (1-x)^b ln(x)           T*_n e^{2ikx} H_nu(wx) dx = dM/da
//   kind 2: int x^a (1-x)^b ln(1-x)         T*_n e^{2ikx} H_nu(wx) dx = dM/db
//   kind 3: int x^a (1-x)^b ln(x) ln(1-x)   T*_n e^{2ikx} H_nu(wx) dx = d2M/da db
// satisfy the moment recurrence with an inhomogeneous right-hand side built
// from the parameter derivatives of its coefficients applied to the lower-kind
// tables. Starting values must be supplied (for instance from the oracle).

#include <array>

#include "osci/moments.hpp"

namespace osci::moments {

enum class LogKind { log_x = 1, log_1mx = 2, log_both = 3 };

struct LogDependencies {
  const MomentTable* base = nullptr;   // plain moments, always required
  const MomentTable* log_x = nullptr;  // kind 1, required for kind 3
  const MomentTable* log_1mx = nullptr;  // kind 2, required for kind 3
};

/// r_n for the given kind; throws DomainError when a dependency is missing.
/// Row n reads dependency entries n-3..n+3.
RowSource log_moment_rhs(const ProblemParams& p, LogKind kind, const LogDependencies& deps);

/// Log-weighted moments for n = 0..n_max. Uses forward recursion where it is
/// allowed and the boundary-value solve otherwise; the boundary-value endpoint
/// is limited by the length of the dependency tables (ConvergenceError when
/// they are too short, see log_dependency_length).
MomentTable log_moment_solve(const ProblemParams& p, LogKind kind, const std::array<cplx, 5>& start,
                             const LogDependencies& deps, int n_max,
                             const RecurrenceOptions& opts = {});

/// Dependency table length that lets log_moment_solve run its endpoint
/// doubling three times.
int log_dependency_length(const ProblemParams& p, int n_max);

}  // namespace osci::moments
