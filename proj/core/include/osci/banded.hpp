#pragma once

// Complex banded LU with row partial pivoting confined to the band, in the
// LAPACK gbtrf storage layout (extra kl superdiagonals hold the fill-in).

#include <complex>
#include <span>
#include <vector>

namespace osci::banded {

using cplx = std::complex<double>;

class BandedMatrix {
 public:
  BandedMatrix(int n, int kl, int ku);

  int size() const noexcept { return n_; }
  int kl() const noexcept { return kl_; }
  int ku() const noexcept { return ku_; }

  /// True when (i, j) lies inside the declared band.
  bool in_band(int i, int j) const noexcept { return i - j <= kl_ && j - i <= ku_; }

  /// Entry (i, j); must be inside the band.
  cplx& operator()(int i, int j);
  cplx operator()(int i, int j) const;

 private:
  friend class BandedLU;
  cplx& raw(int i, int j) { return ab_[static_cast<std::size_t>(j) * ld_ + (kl_ + ku_ + i - j)]; }

  int n_;
  int kl_;
  int ku_;
  int ld_;
  std::vector<cplx> ab_;
};

class BandedLU {
 public:
  /// Factorizes in place; throws SingularError on an exactly zero pivot column.
  explicit BandedLU(BandedMatrix a);

  /// Solves A x = b, overwriting b.
  void solve(std::span<cplx> b) const;

  /// max |u_ii| / min |u_ii|; a cheap singularity indicator.
  double pivot_ratio() const noexcept { return pivot_ratio_; }

 private:
  BandedMatrix lu_;
  std::vector<int> piv_;
  double pivot_ratio_ = 1.0;
};

}  // namespace osci::banded
