#include "bsk/arith.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

namespace bsk {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ConfigError(std::string("dimension mismatch in ") + what + ": " + std::to_string(a) +
                      " vs " + std::to_string(b));
  }
}

}  // namespace

IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

IntVector unit_vector(std::size_t n, std::size_t i, long sign) {
  IntVector e = zero_vector(n);
  e[i] = sign;
  return e;
}

bool is_zero(const IntVector& z) {
  return std::all_of(z.begin(), z.end(), [](const Integer& c) { return c == 0; });
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  IntVector c = a;
  c += b;
  return c;
}

IntVector& operator+=(IntVector& a, const IntVector& b) {
  require_same_dim(a.size(), b.size(), "vector addition");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  require_same_dim(a.size(), b.size(), "vector subtraction");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVector operator-(const IntVector& a) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

IntVector scaled(const IntVector& a, const Integer& c) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

RationalVector to_rational(const IntVector& z) {
  RationalVector a(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) a[i] = Rational(z[i]);
  return a;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.size(), b.size(), "vector addition");
  RationalVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RationalVector operator-(const RationalVector& a) {
  RationalVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

bool is_zero(const RationalVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c == 0; });
}

Rational max_abs(const RationalVector& a) {
  Rational m = 0;
  for (const auto& c : a) {
    Rational v = abs(c);
    if (v > m) m = v;
  }
  return m;
}

std::string to_string(const IntVector& z) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < z.size(); ++i) os << (i ? "," : "") << z[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(const RationalVector& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i].get_str();
  return os.str();
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t n) : n_(n), e_(n * n, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()) {
  e_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw ConfigError("matrix must be square");
    for (long v : row) e_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ConfigError("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

// Fraction-free Bareiss elimination.
Integer IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  std::vector<Integer> a = e_;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n_ + j]; };
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        Integer num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t n) : n_(n), e_(n * n, Rational(0)) {}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.dim()) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = Rational(m(i, j));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::inverse() const {
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && a(p, c) == 0) ++p;
    if (p == n_) throw ConfigError("matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n_; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n_; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool RationalMatrix::is_scalar(const Rational& c) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? c : Rational(0))) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  RationalMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector mat_apply(const IntMatrix& m, const IntVector& z) {
  require_same_dim(m.dim(), z.size(), "mat_apply");
  IntVector r = zero_vector(z.size());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r[i] += m(i, j) * z[j];
  return r;
}

RationalVector mat_apply_rational(const RationalMatrix& m, const RationalVector& a) {
  require_same_dim(m.dim(), a.size(), "mat_apply_rational");
  RationalVector r(a.size(), Rational(0));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r[i] += m(i, j) * a[j];
  return r;
}

RationalVector mat_apply_inverse(const IntMatrix& m, const RationalVector& a) {
  return mat_apply_rational(RationalMatrix(m).inverse(), a);
}

// ---------------------------------------------------------------------------
// Lattice

namespace {

// col_i <- s*col_i + t*col_j ; col_j <- u*col_i + v*col_j, on both H and U.
void combine_columns(IntMatrix& m, std::size_t i, std::size_t j, const Integer& s,
                     const Integer& t, const Integer& u, const Integer& v) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Integer ci = m(r, i);
    Integer cj = m(r, j);
    m(r, i) = s * ci + t * cj;
    m(r, j) = u * ci + v * cj;
  }
}

void subtract_column_multiple(IntMatrix& m, std::size_t target, std::size_t source,
                              const Integer& q) {
  for (std::size_t r = 0; r < m.dim(); ++r) m(r, target) -= q * m(r, source);
}

void negate_column(IntMatrix& m, std::size_t j) {
  for (std::size_t r = 0; r < m.dim(); ++r) m(r, j) = -m(r, j);
}

}  // namespace

Lattice::Lattice(IntMatrix m) : m_(std::move(m)), h_(m_), u_(IntMatrix::identity(m_.dim())) {
  const std::size_t n = m_.dim();
  if (n == 0) throw ConfigError("lattice dimension must be positive");
  index_ = abs(m_.determinant());
  if (index_ == 0) throw ConfigError("singular matrix " + to_string(m_));

  for (std::size_t i = 0; i < n; ++i) {
    // Clear row i to the right of the diagonal with unimodular column moves.
    for (std::size_t j = i + 1; j < n; ++j) {
      if (h_(i, j) == 0) continue;
      Integer a = h_(i, i);
      Integer b = h_(i, j);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer u = -(b / g);
      Integer v = a / g;
      combine_columns(h_, i, j, s, t, u, v);
      combine_columns(u_, i, j, s, t, u, v);
    }
    if (h_(i, i) < 0) {
      negate_column(h_, i);
      negate_column(u_, i);
    }
    assert(h_(i, i) != 0);
    for (std::size_t j = 0; j < i; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h_(i, j).get_mpz_t(), h_(i, i).get_mpz_t());
      if (q == 0) continue;
      subtract_column_multiple(h_, j, i, q);
      subtract_column_multiple(u_, j, i, q);
    }
  }
}

LatticeDecomposition Lattice::decompose(const IntVector& z) const {
  const std::size_t n = dim();
  if (z.size() != n) {
    throw ConfigError("dimension mismatch in lattice_decompose: " + std::to_string(z.size()) +
                      " vs " + std::to_string(n));
  }
  IntVector r = z;
  IntVector c = zero_vector(n);
  for (std::size_t j = 0; j < n; ++j) {
    mpz_fdiv_q(c[j].get_mpz_t(), r[j].get_mpz_t(), h_(j, j).get_mpz_t());
    if (c[j] == 0) continue;
    for (std::size_t i = j; i < n; ++i) r[i] -= c[j] * h_(i, j);
  }
  return {std::move(r), mat_apply(u_, c)};
}

bool Lattice::contains(const IntVector& z) const { return is_zero(decompose(z).residue); }

ResidueSystem Lattice::residues() const {
  const std::size_t n = dim();
  ResidueSystem rs{m_, {}};
  rs.representatives.reserve(index_.get_ui());
  IntVector cur = zero_vector(n);
  // Odometer over the HNF box, last coordinate fastest.
  while (true) {
    rs.representatives.push_back(cur);
    std::size_t k = n;
    while (k > 0) {
      --k;
      ++cur[k];
      if (cur[k] < h_(k, k)) break;
      cur[k] = 0;
      if (k == 0) return rs;
    }
  }
}

LatticeDecomposition lattice_decompose(const IntVector& z, const IntMatrix& m) {
  return Lattice(m).decompose(z);
}

bool in_lattice(const IntVector& z, const IntMatrix& m) { return Lattice(m).contains(z); }

ResidueSystem residues(const IntMatrix& m) { return Lattice(m).residues(); }

}  // namespace bsk
