#include "matrix.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace hkl {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

namespace {

IntMatrix clear_denominators(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational v = m(r, c) * l;
      out(r, c) = v.get_num();
    }
  }
  return out;
}

// Fraction-free elimination; returns rank and (for square input) det with sign.
std::size_t bareiss(IntMatrix a, Integer* det) {
  std::size_t rank = 0;
  Integer prev = 1;
  int sign = 1;
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && a(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      a.swap_rows(p, rank);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer num = a(rank, col) * a(i, j) - a(i, col) * a(rank, j);
        if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
          fail(ErrorCode::Internal, "Bareiss step not exact");
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  if (det) *det = (rank == rows && rows == cols) ? Integer(sign * prev) : Integer(0);
  return rank;
}

}  // namespace

std::size_t rank(const IntMatrix& m) { return bareiss(m, nullptr); }
std::size_t rank(const RationalMatrix& m) { return bareiss(clear_denominators(m), nullptr); }

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Integer d;
  bareiss(m, &d);
  return d;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  Rational scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    scale *= l;
  }
  return Rational(determinant(clear_denominators(m))) / scale;
}

RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivots) {
  RationalMatrix a = m;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  std::vector<std::size_t> piv;
  RationalMatrix a = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // Row-reduce [m^t | I] over Z; rows whose left block vanishes span the kernel.
  const std::size_t n = m.cols(), k = m.rows();
  IntMatrix a(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = m(j, i);
    a(i, k + i) = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i)
        if (a(i, c) != 0 && (best == n || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best == n) break;
      a.swap_rows(best, r);
      bool done = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (a(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        for (std::size_t j = 0; j < k + n; ++j) a(i, j) -= q * a(r, j);
        if (a(i, c) != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  IntMatrix out;
  for (std::size_t i = r; i < n; ++i) {
    std::vector<Integer> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = a(i, k + j);
    out.append_row(v);
  }
  if (out.rows() == 0) out = IntMatrix(0, n);
  return out;
}

std::vector<Integer> smith_invariants(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;
      a.swap_rows(pr, t);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, pc), a(i, t));
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            for (std::size_t c = t; c < cols; ++c) a(t, c) += a(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a(t, t)));
  }
  return diag;
}

Inertia inertia(const RationalMatrix& sym) {
  if (!sym.is_symmetric()) fail(ErrorCode::InvalidArgument, "inertia requires a symmetric matrix");
  RationalMatrix a = sym;
  const std::size_t n = a.rows();
  Inertia out;
  auto swap_sym = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        swap_sym(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) {
          ++out.zero;
          continue;
        }
        // a(k,k) becomes 2 a(k,j) after adding basis vector j to k.
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    const Rational p = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / p;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    if (p > 0) ++out.positive;
    else ++out.negative;
  }
  return out;
}

IntMatrix lll_reduce_gram(const RationalMatrix& gram) {
  const std::size_t n = gram.rows();
  IntMatrix T = IntMatrix::identity(n);
  if (n < 2) return T;
  RationalMatrix mu(n, n);
  std::vector<Rational> B(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = gram(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= mu(j, k) * mu(i, k) * B[k];
      mu(i, j) = s / B[j];
    }
    Rational s = gram(i, i);
    for (std::size_t k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * B[k];
    if (s <= 0) fail(ErrorCode::InvalidArgument, "LLL requires a positive-definite Gram matrix");
    B[i] = s;
  }
  auto reduce = [&](std::size_t k, std::size_t l) {
    Rational twice = 2 * mu(k, l);
    if (abs(twice) <= 1) return;
    // nearest integer to mu(k,l)
    Integer q;
    Rational shifted = mu(k, l) + Rational(1, 2);
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) T(k, c) -= q * T(l, c);
    mu(k, l) -= q;
    for (std::size_t j = 0; j < l; ++j) mu(k, j) -= q * mu(l, j);
  };
  const Rational delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    reduce(k, k - 1);
    if (B[k] < (delta - mu(k, k - 1) * mu(k, k - 1)) * B[k - 1]) {
      Rational m = mu(k, k - 1);
      Rational b = B[k] + m * m * B[k - 1];
      mu(k, k - 1) = m * B[k - 1] / b;
      B[k] = B[k - 1] * B[k] / b;
      B[k - 1] = b;
      T.swap_rows(k, k - 1);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu(k, j), mu(k - 1, j));
      for (std::size_t i = k + 1; i < n; ++i) {
        Rational t = mu(i, k);
        mu(i, k) = mu(i, k - 1) - m * t;
        mu(i, k - 1) = t + mu(k, k - 1) * mu(i, k);
      }
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
  }
  return T;
}

std::string matrix_to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace hkl
