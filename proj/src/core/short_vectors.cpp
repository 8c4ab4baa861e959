#include "short_vectors.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace hkl::lattice {

namespace {

// Fincke-Pohst tree over the form written as sum_i d_i (x_i + sum_{j>i} m_ij x_j)^2.
class Enumerator {
 public:
  Enumerator(const RationalMatrix& q, const Rational& target) : n_(q.rows()), target_(target), coef_(q) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (coef_(i, i) <= 0) fail(ErrorCode::InvalidArgument, "short-vector enumeration needs a definite form");
      for (std::size_t j = i + 1; j < n_; ++j) {
        coef_(j, i) = coef_(i, j);
        coef_(i, j) /= coef_(i, i);
      }
      for (std::size_t k = i + 1; k < n_; ++k)
        for (std::size_t l = k; l < n_; ++l) coef_(k, l) -= coef_(k, i) * coef_(i, l);
    }
    x_.assign(n_, 0);
  }

  std::vector<Vec> run() {
    if (n_ > 0 && target_ > 0) descend(n_ - 1, target_);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void descend(std::size_t i, const Rational& remaining) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (x_[j] != 0) center -= coef_(i, j) * x_[j];
    Rational span = remaining / coef_(i, i);
    double r = std::sqrt(std::max(0.0, span.get_d()));
    double c = center.get_d();
    long lo = static_cast<long>(std::floor(c - r)) - 1, hi = static_cast<long>(std::ceil(c + r)) + 1;
    for (long x = lo; x <= hi; ++x) {
      Rational dev = Rational(x) - center;
      Rational used = coef_(i, i) * dev * dev;
      if (used > remaining) continue;
      x_[i] = x;
      Rational left = remaining - used;
      if (i == 0) {
        if (left == 0) out_.push_back(x_);
      } else {
        descend(i - 1, left);
      }
    }
    x_[i] = 0;
  }

  std::size_t n_;
  Rational target_;
  RationalMatrix coef_;
  Vec x_;
  std::vector<Vec> out_;
};

}  // namespace

std::vector<Vec> enumerate_exact(const RationalMatrix& q, const Rational& target) {
  if (!q.is_symmetric()) fail(ErrorCode::InvalidArgument, "enumeration needs a symmetric form");
  return Enumerator(q, target).run();
}

std::vector<Vec> vectors_of_norm(const IntegralLattice& lattice, long norm) {
  if (norm >= 0) fail(ErrorCode::InvalidArgument, "norm must be negative for a negative-definite lattice");
  if (!lattice.negative_definite())
    fail(ErrorCode::InvalidArgument, "root enumeration requires a negative-definite lattice");
  return enumerate_exact(to_rational(-lattice.gram()), Rational(-norm));
}

}  // namespace hkl::lattice
