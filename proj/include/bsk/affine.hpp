#pragma once

#include <cstdint>
#include <string>

#include "bsk/presentation.hpp"
#include "bsk/words.hpp"

namespace bsk {

/// (k, a) in Z ⋉ Q^n with (k,a)(k',a') = (k+k', a + Lambda^k a'), Lambda = A B^{-1}.
struct AffineElement {
  std::int64_t k = 0;
  RationalVector a;

  bool is_identity() const { return k == 0 && is_zero(a); }
  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

AffineElement aff_identity(const GroupSpec& spec);
AffineElement aff_compose(const AffineElement& e1, const AffineElement& e2, const GroupSpec& spec);
AffineElement aff_invert(const AffineElement& e, const GroupSpec& spec);

/// Image of a single letter: x^z -> (0, z), t^e -> (e, 0).
AffineElement aff_letter(const Letter& letter, const GroupSpec& spec);

/// The homomorphism Gamma -> Z ⋉ Q^n, folded left to right.
AffineElement j_affine(const Word& w, const GroupSpec& spec);
AffineElement j_affine(const NormalForm& w, const GroupSpec& spec);

/// "(k; a1, a2, ...)" with exact rationals, e.g. "(2; 2/3)".
std::string render(const AffineElement& e);

}  // namespace bsk
