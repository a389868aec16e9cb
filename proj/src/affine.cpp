#include "bsk/affine.hpp"

namespace bsk {

AffineElement aff_identity(const GroupSpec& spec) {
  return {0, RationalVector(spec.dim(), Rational(0))};
}

AffineElement aff_compose(const AffineElement& e1, const AffineElement& e2,
                          const GroupSpec& spec) {
  if (is_zero(e2.a)) return {e1.k + e2.k, e1.a};
  return {e1.k + e2.k, e1.a + mat_apply_rational(spec.lambda_power(e1.k), e2.a)};
}

AffineElement aff_invert(const AffineElement& e, const GroupSpec& spec) {
  return {-e.k, -mat_apply_rational(spec.lambda_power(-e.k), e.a)};
}

AffineElement aff_letter(const Letter& letter, const GroupSpec& spec) {
  if (const auto* g = std::get_if<GenPower>(&letter)) return {0, to_rational(g->z)};
  return {std::get<StableLetter>(letter).sign, RationalVector(spec.dim(), Rational(0))};
}

AffineElement j_affine(const Word& w, const GroupSpec& spec) {
  AffineElement e = aff_identity(spec);
  for (const auto& letter : w) e = aff_compose(e, aff_letter(letter, spec), spec);
  return e;
}

AffineElement j_affine(const NormalForm& w, const GroupSpec& spec) {
  return j_affine(to_word(w), spec);
}

std::string render(const AffineElement& e) {
  return "(" + std::to_string(e.k) + "; " + to_string(e.a) + ")";
}

}  // namespace bsk
