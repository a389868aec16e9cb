#pragma once

// Exact integer/rational linear algebra over Z^n and Q^n.
//
// Everything here is exact; there is no floating point in this module.
// Big integers and rationals are GMP's mpz_class / mpq_class.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bsk/errors.hpp"

namespace bsk {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i, long sign = 1);
bool is_zero(const IntVector& z);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector& operator+=(IntVector& a, const IntVector& b);
IntVector scaled(const IntVector& a, const Integer& c);

RationalVector to_rational(const IntVector& z);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);
bool is_zero(const RationalVector& a);

/// Max-norm of a rational vector (exact).
Rational max_abs(const RationalVector& a);

std::string to_string(const IntVector& z);
std::string to_string(const RationalVector& a);

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t dim() const { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  IntVector column(std::size_t j) const;
  Integer determinant() const;
  bool is_identity() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Integer> e_;
};

std::string to_string(const IntMatrix& m);

/// Square matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n);
  explicit RationalMatrix(const IntMatrix& m);
  static RationalMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  /// Exact inverse by Gauss-Jordan elimination over Q. Throws ConfigError if singular.
  RationalMatrix inverse() const;
  bool is_scalar(const Rational& c) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> e_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

IntVector mat_apply(const IntMatrix& m, const IntVector& z);
RationalVector mat_apply_rational(const RationalMatrix& m, const RationalVector& a);
/// Applies M^{-1} exactly; throws ConfigError when M is singular.
RationalVector mat_apply_inverse(const IntMatrix& m, const RationalVector& a);

/// Coset representatives of M Z^n in Z^n, zero first.
struct ResidueSystem {
  IntMatrix matrix;
  std::vector<IntVector> representatives;
};

/// z = M h + r with r the canonical residue.
struct LatticeDecomposition {
  IntVector residue;
  IntVector quotient;
};

/// The lattice M Z^n together with its column Hermite normal form H = M U
/// (lower triangular, positive diagonal, 0 <= H(i,j) < H(i,i) for j < i).
/// Canonical residues live in the box prod_i [0, H(i,i)).
class Lattice {
 public:
  explicit Lattice(IntMatrix m);

  const IntMatrix& matrix() const { return m_; }
  const IntMatrix& hermite() const { return h_; }
  const IntMatrix& unimodular() const { return u_; }
  std::size_t dim() const { return m_.dim(); }
  /// |det M|, the index of M Z^n in Z^n.
  const Integer& index() const { return index_; }

  LatticeDecomposition decompose(const IntVector& z) const;
  bool contains(const IntVector& z) const;
  /// Solves z = M h; only meaningful when contains(z).
  IntVector quotient(const IntVector& z) const { return decompose(z).quotient; }
  ResidueSystem residues() const;

 private:
  IntMatrix m_;
  IntMatrix h_;
  IntMatrix u_;
  Integer index_;
};

LatticeDecomposition lattice_decompose(const IntVector& z, const IntMatrix& m);
bool in_lattice(const IntVector& z, const IntMatrix& m);
ResidueSystem residues(const IntMatrix& m);

}  // namespace bsk
