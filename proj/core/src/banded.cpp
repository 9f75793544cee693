#include "osci/banded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "osci/error.hpp"

namespace osci::banded {

BandedMatrix::BandedMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ld_(2 * kl + ku + 1) {
  if (n < 1 || kl < 0 || ku < 0) throw DomainError(Stage::recurrence, "invalid band dimensions");
  ab_.assign(static_cast<std::size_t>(ld_) * n, cplx{0.0, 0.0});
}

cplx& BandedMatrix::operator()(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || !in_band(i, j)) {
    throw DomainError(Stage::recurrence, "banded entry (" + std::to_string(i) + ", " +
                                             std::to_string(j) + ") outside the band");
  }
  return raw(i, j);
}

cplx BandedMatrix::operator()(int i, int j) const {
  return const_cast<BandedMatrix&>(*this)(i, j);
}

BandedLU::BandedLU(BandedMatrix a) : lu_(std::move(a)), piv_(lu_.n_) {
  const int n = lu_.n_;
  const int kl = lu_.kl_;
  int ju = 0;  // last column touched by the U part so far
  double umax = 0.0;
  double umin = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    const int km = std::min(kl, n - 1 - j);
    int p = 0;
    double best = std::abs(lu_.raw(j, j));
    for (int i = 1; i <= km; ++i) {
      const double v = std::abs(lu_.raw(j + i, j));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    piv_[j] = j + p;
    if (best == 0.0) {
      throw SingularError(Stage::recurrence,
                          "banded system is singular at column " + std::to_string(j));
    }
    umax = std::max(umax, best);
    umin = std::min(umin, best);
    ju = std::max(ju, std::min(j + lu_.ku_ + p, n - 1));
    if (p != 0) {
      for (int c = j; c <= ju; ++c) std::swap(lu_.raw(j, c), lu_.raw(j + p, c));
    }
    const cplx inv = 1.0 / lu_.raw(j, j);
    for (int i = 1; i <= km; ++i) lu_.raw(j + i, j) *= inv;
    for (int c = j + 1; c <= ju; ++c) {
      const cplx u = lu_.raw(j, c);
      if (u == cplx{0.0, 0.0}) continue;
      for (int i = 1; i <= km; ++i) lu_.raw(j + i, c) -= lu_.raw(j + i, j) * u;
    }
  }
  pivot_ratio_ = umax / umin;
}

void BandedLU::solve(std::span<cplx> b) const {
  const int n = lu_.n_;
  if (static_cast<int>(b.size()) != n) {
    throw DomainError(Stage::recurrence, "right-hand side length does not match the matrix");
  }
  auto& m = const_cast<BandedMatrix&>(lu_);
  const int kl = lu_.kl_;
  const int kv = lu_.kl_ + lu_.ku_;
  for (int j = 0; j < n; ++j) {
    if (piv_[j] != j) std::swap(b[j], b[piv_[j]]);
    const int km = std::min(kl, n - 1 - j);
    for (int i = 1; i <= km; ++i) b[j + i] -= m.raw(j + i, j) * b[j];
  }
  for (int j = n - 1; j >= 0; --j) {
    b[j] /= m.raw(j, j);
    const int lo = std::max(0, j - kv);
    for (int i = lo; i < j; ++i) b[i] -= m.raw(i, j) * b[j];
  }
}

}  // namespace osci::banded
