#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bsk/arith.hpp"
#include "bsk/presentation.hpp"

namespace bsk {

/// x^z, an element of the vertex group Z^n.
struct GenPower {
  IntVector z;
  friend bool operator==(const GenPower&, const GenPower&) = default;
};

/// t^sign, sign = +1 or -1.
struct StableLetter {
  int sign = 1;
  friend bool operator==(const StableLetter&, const StableLetter&) = default;
};

using Letter = std::variant<GenPower, StableLetter>;
using Word = std::vector<Letter>;

struct Syllable {
  int sign = 1;  // t^sign
  IntVector x;   // the x-power following t^sign
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// x^{head} t^{e1} x^{z1} ... t^{em} x^{zm}.
///
/// Values produced by britton_reduce and the nf_* operations are pinch-free
/// and canonical: every x-power that precedes a t^e is the HNF residue modulo
/// the lattice for e (A Z^n for e=+1, B Z^n for e=-1); only the last x-power
/// is unrestricted. Two canonical forms are equal iff the elements are equal.
struct NormalForm {
  IntVector head;
  std::vector<Syllable> tail;

  std::size_t t_length() const { return tail.size(); }
  /// The trailing x-power (head when t_length() == 0).
  const IntVector& last_x() const { return tail.empty() ? head : tail.back().x; }
  IntVector& last_x() { return tail.empty() ? head : tail.back().x; }
  bool is_identity() const { return tail.empty() && is_zero(head); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm identity_nf(const GroupSpec& spec);

/// Parses the word grammar:
///   word := atom* ; atom := gen ('^' int)? ;
///   gen  := 'x' | 'x'IDX | 'v[' int (',' int)* ']' | 't'
/// A lone "1" is accepted as the empty word. No reduction is performed
/// except that t^k expands to |k| stable letters.
Word parse_word(std::string_view text, const GroupSpec& spec);

/// Order in which literal pinch rewriting picks the next pinch.
enum class PinchOrder { Leftmost, Rightmost };

/// Canonical Britton normal form (single left-to-right stack pass).
NormalForm britton_reduce(const Word& w, const GroupSpec& spec);

/// Literal rewriting: merge x-letters, then repeatedly apply the leftmost or
/// rightmost pinch until none applies, then canonicalize. Quadratic; meant
/// for cross-checking britton_reduce.
NormalForm britton_reduce(const Word& w, const GroupSpec& spec, PinchOrder order);

/// Pushes residue carries left to right through a pinch-free form.
void canonicalize(NormalForm& nf, const GroupSpec& spec);

/// Appends one letter to a canonical normal form, keeping it canonical.
void nf_append(NormalForm& nf, const Letter& letter, const GroupSpec& spec);

bool word_problem(const Word& w, const GroupSpec& spec);

NormalForm nf_multiply(const NormalForm& u, const NormalForm& w, const GroupSpec& spec);
NormalForm nf_invert(const NormalForm& u, const GroupSpec& spec);

Word to_word(const NormalForm& nf);
Word concat(const Word& u, const Word& w);
Word invert(const Word& w);
/// t-exponent sum.
long t_exponent_sum(const Word& w);

/// Renders "x^2 t x^-1 t^-1" (n = 1) or "v[1,0] t v[0,-5]" (n > 1);
/// zero x-powers are omitted and the identity renders as "1".
std::string render(const NormalForm& nf);
std::string render(const Word& w);
std::string render_x(const IntVector& z);

}  // namespace bsk
