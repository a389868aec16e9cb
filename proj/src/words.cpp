#include "bsk/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace bsk {

NormalForm identity_nf(const GroupSpec& spec) { return {zero_vector(spec.dim()), {}}; }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const GroupSpec& spec) : s_(text), spec_(spec) {}

  Word parse() {
    Word w;
    skip_ws();
    if (rest_is("1")) {
      ++pos_;
      skip_ws();
      if (pos_ != s_.size()) fail("unexpected input after identity '1'");
      return w;
    }
    while (pos_ < s_.size()) {
      parse_atom(w);
      skip_ws();
    }
    return w;
  }

 private:
  bool rest_is(std::string_view lit) const {
    std::size_t end = pos_ + lit.size();
    if (s_.substr(pos_, lit.size()) != lit) return false;
    return end == s_.size() || std::isspace(static_cast<unsigned char>(s_[end]));
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Integer parse_int() {
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    std::string tok(s_.substr(start, pos_ - start));
    if (tok[0] == '+') tok.erase(0, 1);
    return Integer(tok, 10);
  }

  void parse_atom(Word& w) {
    const std::size_t atom_pos = pos_;
    const std::size_t n = spec_.dim();
    char c = s_[pos_];
    if (c == 't') {
      ++pos_;
      Integer e = parse_exponent();
      int sign = e > 0 ? 1 : -1;
      if (abs(e) > 1'000'000) {
        pos_ = atom_pos;
        fail("t exponent too large");
      }
      for (long i = 0, k = Integer(abs(e)).get_si(); i < k; ++i) w.emplace_back(StableLetter{sign});
      return;
    }
    if (c == 'x') {
      ++pos_;
      std::size_t idx = 0;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        unsigned long v = std::strtoul(std::string(s_.substr(start, pos_ - start)).c_str(),
                                       nullptr, 10);
        if (v < 1 || v > n) {
          pos_ = start;
          fail("generator index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        }
        idx = v - 1;
      } else if (n != 1) {
        pos_ = atom_pos;
        fail("bare 'x' needs an index when n = " + std::to_string(n));
      }
      Integer e = parse_exponent();
      IntVector z = zero_vector(n);
      z[idx] = e;
      w.emplace_back(GenPower{std::move(z)});
      return;
    }
    if (c == 'v') {
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] != '[') fail("expected '[' after 'v'");
      ++pos_;
      IntVector z;
      while (true) {
        skip_ws();
        z.push_back(parse_int());
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ']') {
          ++pos_;
          break;
        }
        fail("expected ',' or ']'");
      }
      if (z.size() != n) {
        pos_ = atom_pos;
        fail("vector atom has " + std::to_string(z.size()) + " coordinates, expected " +
             std::to_string(n));
      }
      Integer e = parse_exponent();
      w.emplace_back(GenPower{scaled(z, e)});
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Integer parse_exponent() {
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      return parse_int();
    }
    return 1;
  }

  std::string_view s_;
  const GroupSpec& spec_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const GroupSpec& spec) {
  return WordParser(text, spec).parse();
}

// ---------------------------------------------------------------------------
// Reduction

void nf_append(NormalForm& nf, const Letter& letter, const GroupSpec& spec) {
  if (const auto* g = std::get_if<GenPower>(&letter)) {
    nf.last_x() += g->z;
    return;
  }
  const int eps = std::get<StableLetter>(letter).sign;
  if (!nf.tail.empty() && nf.tail.back().sign == -eps) {
    // t x^{Bh} t^-1 -> x^{Ah}  or  t^-1 x^{Ah} t -> x^{Bh}
    const int prev = nf.tail.back().sign;
    LatticeDecomposition d = spec.lattice_for(eps).decompose(nf.tail.back().x);
    if (is_zero(d.residue)) {
      IntVector image = mat_apply(spec.lattice_for(prev).matrix(), d.quotient);
      nf.tail.pop_back();
      nf.last_x() += image;
      return;
    }
  }
  // x^{Mh + r} t^eps = x^r t^eps x^{M'h}
  IntVector& z = nf.last_x();
  LatticeDecomposition d = spec.lattice_for(eps).decompose(z);
  z = std::move(d.residue);
  nf.tail.push_back({eps, mat_apply(spec.lattice_for(-eps).matrix(), d.quotient)});
}

NormalForm britton_reduce(const Word& w, const GroupSpec& spec) {
  NormalForm nf = identity_nf(spec);
  for (const auto& letter : w) nf_append(nf, letter, spec);
  return nf;
}

void canonicalize(NormalForm& nf, const GroupSpec& spec) {
  IntVector* cur = &nf.head;
  for (auto& syl : nf.tail) {
    LatticeDecomposition d = spec.lattice_for(syl.sign).decompose(*cur);
    *cur = std::move(d.residue);
    syl.x += mat_apply(spec.lattice_for(-syl.sign).matrix(), d.quotient);
    cur = &syl.x;
  }
}

namespace {

// Raw syllable form: adjacent x-letters merged, no carries pushed.
NormalForm merge_letters(const Word& w, const GroupSpec& spec) {
  NormalForm nf = identity_nf(spec);
  for (const auto& letter : w) {
    if (const auto* g = std::get_if<GenPower>(&letter)) {
      nf.last_x() += g->z;
    } else {
      nf.tail.push_back({std::get<StableLetter>(letter).sign, zero_vector(spec.dim())});
    }
  }
  return nf;
}

// Pinch between tail[i] and tail[i+1], i.e. t^{e} x^{z} t^{-e} with z = tail[i].x.
bool pinch_at(const NormalForm& nf, std::size_t i, const GroupSpec& spec) {
  const Syllable& a = nf.tail[i];
  const Syllable& b = nf.tail[i + 1];
  return a.sign == -b.sign && spec.lattice_for(b.sign).contains(a.x);
}

void apply_pinch(NormalForm& nf, std::size_t i, const GroupSpec& spec) {
  const int outer = nf.tail[i].sign;
  IntVector h = spec.lattice_for(-outer).quotient(nf.tail[i].x);
  IntVector carry = mat_apply(spec.lattice_for(outer).matrix(), h) + nf.tail[i + 1].x;
  IntVector& before = i == 0 ? nf.head : nf.tail[i - 1].x;
  before += carry;
  nf.tail.erase(nf.tail.begin() + static_cast<std::ptrdiff_t>(i),
                nf.tail.begin() + static_cast<std::ptrdiff_t>(i + 2));
}

}  // namespace

NormalForm britton_reduce(const Word& w, const GroupSpec& spec, PinchOrder order) {
  NormalForm nf = merge_letters(w, spec);
  while (nf.tail.size() >= 2) {
    const std::size_t last = nf.tail.size() - 2;
    bool found = false;
    std::size_t at = 0;
    for (std::size_t k = 0; k <= last; ++k) {
      std::size_t i = order == PinchOrder::Leftmost ? k : last - k;
      if (pinch_at(nf, i, spec)) {
        found = true;
        at = i;
        break;
      }
    }
    if (!found) break;
    apply_pinch(nf, at, spec);
  }
  canonicalize(nf, spec);
  return nf;
}

bool word_problem(const Word& w, const GroupSpec& spec) {
  return britton_reduce(w, spec).is_identity();
}

Word to_word(const NormalForm& nf) {
  Word w;
  if (!is_zero(nf.head)) w.emplace_back(GenPower{nf.head});
  for (const auto& syl : nf.tail) {
    w.emplace_back(StableLetter{syl.sign});
    if (!is_zero(syl.x)) w.emplace_back(GenPower{syl.x});
  }
  return w;
}

Word concat(const Word& u, const Word& w) {
  Word r = u;
  r.insert(r.end(), w.begin(), w.end());
  return r;
}

Word invert(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (const auto* g = std::get_if<GenPower>(&*it)) {
      r.emplace_back(GenPower{-g->z});
    } else {
      r.emplace_back(StableLetter{-std::get<StableLetter>(*it).sign});
    }
  }
  return r;
}

long t_exponent_sum(const Word& w) {
  long k = 0;
  for (const auto& letter : w)
    if (const auto* s = std::get_if<StableLetter>(&letter)) k += s->sign;
  return k;
}

NormalForm nf_multiply(const NormalForm& u, const NormalForm& w, const GroupSpec& spec) {
  NormalForm r = u;
  for (const auto& letter : to_word(w)) nf_append(r, letter, spec);
  return r;
}

NormalForm nf_invert(const NormalForm& u, const GroupSpec& spec) {
  return britton_reduce(invert(to_word(u)), spec);
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_x(const IntVector& z) {
  if (z.size() == 1) return "x^" + z[0].get_str();
  std::string s = "v[";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) s += ',';
    s += z[i].get_str();
  }
  return s + "]";
}

std::string render(const Word& w) {
  std::string s;
  for (const auto& letter : w) {
    if (!s.empty()) s += ' ';
    if (const auto* g = std::get_if<GenPower>(&letter)) {
      s += render_x(g->z);
    } else {
      s += std::get<StableLetter>(letter).sign > 0 ? "t" : "t^-1";
    }
  }
  return s.empty() ? "1" : s;
}

std::string render(const NormalForm& nf) { return render(to_word(nf)); }

}  // namespace bsk
