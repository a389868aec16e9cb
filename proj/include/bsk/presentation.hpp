#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "bsk/arith.hpp"

namespace bsk {

/// The HNN datum of Gamma = < Z^n, t | t x^{Bz} t^-1 = x^{Az} >.
///
/// BS(p,q) = < x, t | x^p = t x^q t^-1 > is A = (p), B = (q). The matrix A
/// gives the image seen after conjugating by t, B the image before; the
/// Bass-Serre tree therefore has |det A| up-edges ("via t") and |det B|
/// down-edges at every vertex.
///
/// A GroupSpec is immutable once built. Copies share the memo of powers of
/// Lambda = A B^{-1}, which is the only internal mutable state and is guarded.
class GroupSpec {
 public:
  std::size_t dim() const { return n_; }
  const IntMatrix& a() const { return a_->matrix(); }
  const IntMatrix& b() const { return b_->matrix(); }
  const Lattice& lattice_a() const { return *a_; }
  const Lattice& lattice_b() const { return *b_; }
  const ResidueSystem& residues_a() const { return res_a_; }
  const ResidueSystem& residues_b() const { return res_b_; }
  const Integer& index_a() const { return a_->index(); }
  const Integer& index_b() const { return b_->index(); }
  /// Tree degree |det A| + |det B|.
  Integer degree() const { return index_a() + index_b(); }

  /// Lattice for the stable letter t^sign: A Z^n for +1, B Z^n for -1.
  /// Residues mod this lattice label the syllable x^r t^sign.
  const Lattice& lattice_for(int sign) const { return sign > 0 ? *a_ : *b_; }
  const ResidueSystem& residues_for(int sign) const { return sign > 0 ? res_a_ : res_b_; }

  /// Lambda = A B^{-1}; the scalar p/q when n = 1.
  const RationalMatrix& lambda() const { return lambda_; }
  /// Lambda^k for any integer k (exact, memoized).
  const RationalMatrix& lambda_power(std::int64_t k) const;

  bool is_bs() const { return n_ == 1; }
  std::string describe() const;

  friend bool operator==(const GroupSpec& x, const GroupSpec& y) {
    return x.a() == y.a() && x.b() == y.b();
  }

 private:
  friend GroupSpec make_matrix_group(const IntMatrix& a, const IntMatrix& b);

  struct PowerMemo {
    std::mutex mu;
    std::map<std::int64_t, std::unique_ptr<RationalMatrix>> powers;
  };

  std::size_t n_ = 0;
  std::shared_ptr<const Lattice> a_;
  std::shared_ptr<const Lattice> b_;
  ResidueSystem res_a_;
  ResidueSystem res_b_;
  RationalMatrix lambda_;
  RationalMatrix lambda_inv_;
  std::shared_ptr<PowerMemo> memo_;
};

/// BS(p,q): t x^{qz} t^-1 = x^{pz}. Throws ConfigError when p or q is zero.
GroupSpec make_bs(const Integer& p, const Integer& q);

/// General datum over Z^n. Throws ConfigError on singular or mismatched input.
GroupSpec make_matrix_group(const IntMatrix& a, const IntMatrix& b);

}  // namespace bsk
