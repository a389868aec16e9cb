#include <doctest.h>

#include <map>
#include <set>

#include "bsk/embedding.hpp"

using namespace bsk;

namespace {

std::vector<Word> all_words(const GroupSpec& g, std::size_t max_len) {
  const auto letters = generator_letters(g);
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (const auto& l : letters) {
        Word v = w;
        v.push_back(l);
        next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Quadratic dedup: keep a word unless u w^-1 is trivial for some kept u.
std::size_t count_by_word_problem(const GroupSpec& g, std::size_t max_len) {
  std::vector<Word> kept;
  for (const auto& w : all_words(g, max_len)) {
    bool fresh = true;
    for (const auto& u : kept) {
      if (word_problem(concat(u, invert(w)), g)) {
        fresh = false;
        break;
      }
    }
    if (fresh) kept.push_back(w);
  }
  return kept.size();
}

// BS(1,2) as Z[1/2] x| Z, built without the words/tree modules.
// Elements (k, a) with (k,a)(k',a') = (k+k', a + 2^-k a'); vertices are
// cosets (k, a mod 2^-k Z); t-neighbor refines the level, t^-1 coarsens it.
struct AffineModel {
  using Elem = std::pair<long, Rational>;
  static Rational scale(long k) {
    Rational r = 1;
    for (long i = 0; i < std::abs(k); ++i) r *= (k > 0 ? Rational(1, 2) : Rational(2));
    return r;
  }
  static Elem mul(const Elem& e, const Elem& f) {
    return {e.first + f.first, e.second + scale(e.first) * f.second};
  }
  static std::pair<long, std::string> coset(long k, const Rational& a) {
    Rational m = scale(k);
    Rational q = a / m;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = a - m * Rational(fl);
    return {k, r.get_str()};
  }
};

}  // namespace

TEST_CASE("enumerate_ball small radii") {
  GroupSpec g = make_bs(2, 3);
  GroupBall b0 = enumerate_ball(0, g);
  REQUIRE(b0.size() == 1);
  CHECK(b0.elements[0].is_identity());

  GroupBall b1 = enumerate_ball(1, g);
  CHECK(b1.size() == 5);
  for (const char* s : {"1", "x^1", "x^-1", "t", "t^-1"}) {
    CHECK(b1.contains(britton_reduce(parse_word(s, g), g)));
  }
}

TEST_CASE("ball sizes agree with pairwise word-problem dedup") {
  GroupSpec g = make_bs(2, 3);
  for (std::size_t len = 0; len <= 3; ++len) {
    CHECK(enumerate_ball(len, g).size() == count_by_word_problem(g, len));
  }
  GroupSpec asc = make_matrix_group(IntMatrix{{2, 1}, {0, 2}}, IntMatrix::identity(2));
  for (std::size_t len = 0; len <= 2; ++len) {
    CHECK(enumerate_ball(len, asc).size() == count_by_word_problem(asc, len));
  }
}

TEST_CASE("ball sizes for BS(1,2) agree with the Z[1/2] x| Z model") {
  GroupSpec g = make_bs(1, 2);
  GroupBall ball = enumerate_ball(8, g);
  using M = AffineModel;
  std::set<std::pair<long, std::string>> seen{{0, Rational(0).get_str()}};
  std::vector<M::Elem> frontier{{0, Rational(0)}};
  const std::vector<M::Elem> gens{{0, 1}, {0, -1}, {1, 0}, {-1, 0}};
  for (std::size_t len = 1; len <= 8; ++len) {
    std::vector<M::Elem> next;
    for (const auto& e : frontier) {
      for (const auto& s : gens) {
        M::Elem h = M::mul(e, s);
        if (seen.insert({h.first, h.second.get_str()}).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
    std::size_t count = 0;
    for (auto l : ball.lengths) count += l <= len;
    CHECK(count == seen.size());
  }
}

TEST_CASE("ball invariants") {
  for (const GroupSpec& g :
       {make_bs(2, 3), make_bs(1, 2), make_bs(-2, 3),
        make_matrix_group(IntMatrix{{2, 1}, {0, 2}}, IntMatrix::identity(2))}) {
    std::size_t prev = 0;
    for (std::size_t len = 0; len <= 4; ++len) {
      GroupBall b = enumerate_ball(len, g);
      CHECK(b.size() > prev);
      prev = b.size();
    }
    GroupBall b = enumerate_ball(4, g);
    for (const auto& e : b.elements) CHECK(b.contains(nf_invert(e, g)));
    CHECK(b.index.size() == b.size());
  }
}

TEST_CASE("enumerate_ball respects the resource bound") {
  GroupSpec g = make_bs(2, 3);
  CHECK_THROWS_AS(enumerate_ball(13, g), ResourceError);
  CHECK_THROWS_AS(enumerate_ball(5, g, 4), ResourceError);
  GroupSpec g2 = make_matrix_group(IntMatrix{{2, 1}, {0, 2}}, IntMatrix::identity(2));
  CHECK(default_max_radius(g2) == 8);
  CHECK_THROWS_AS(enumerate_ball(9, g2), ResourceError);
}

TEST_CASE("check_injectivity") {
  GroupSpec g = make_bs(2, 3);
  CheckReport r = check_injectivity(enumerate_ball(6, g), g);
  CHECK(r.ok());
  CHECK(r.elements == enumerate_ball(6, g).size());
  CHECK(r.summary() == "OK: 0 violations / " + std::to_string(r.elements) + " elements");

  // x^7 fixes v and is seen by its affine part; t moves v
  NormalForm x7 = britton_reduce(parse_word("x^7", g), g);
  CHECK(act(x7, base_vertex(), g).is_base());
  CHECK(j_affine(x7, g) == AffineElement{0, {Rational(7)}});
  CHECK_FALSE(act(britton_reduce(parse_word("t", g), g), base_vertex(), g).is_base());

  GroupSpec asc = make_matrix_group(IntMatrix{{2, 1}, {0, 2}}, IntMatrix::identity(2));
  CHECK(check_injectivity(enumerate_ball(4, asc), asc).ok());
}

TEST_CASE("check_injectivity reports a planted collision") {
  GroupSpec g = make_bs(2, 3);
  GroupBall b = enumerate_ball(2, g);
  // a second copy of x^2 collides with the first
  b.elements.push_back(britton_reduce(parse_word("t x^3 t^-1", g), g));
  b.lengths.push_back(2);
  CheckReport r = check_injectivity(b, g);
  CHECK_FALSE(r.ok());
  CHECK(r.to_json().find("\"ok\": false") != std::string::npos);
}

TEST_CASE("check_stabilizer") {
  GroupSpec g = make_bs(2, 3);
  CHECK(check_stabilizer(enumerate_ball(6, g), g).ok());

  NormalForm txt = britton_reduce(parse_word("t x t^-1", g), g);
  CHECK(txt.t_length() == 2);
  CHECK_FALSE(act(txt, base_vertex(), g).is_base());
  NormalForm tx3t = britton_reduce(parse_word("t x^3 t^-1", g), g);
  CHECK(tx3t.t_length() == 0);
  CHECK(act(tx3t, base_vertex(), g).is_base());
}

TEST_CASE("properness profile basics") {
  GroupSpec g = make_bs(2, 3);
  PropernessProfile p = properness_profile(6, {0, 1, 2, 4}, g);
  REQUIRE(p.counts.size() == 7);
  for (std::size_t len = 0; len <= 6; ++len) CHECK(p.counts[len][0] == 1);
  CHECK(p.stabilized[0]);
  for (std::size_t len = 0; len <= 6; ++len) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (len) CHECK(p.counts[len][j] >= p.counts[len - 1][j]);
      if (j) CHECK(p.counts[len][j] >= p.counts[len][j - 1]);
    }
  }
  const std::string csv = p.to_csv();
  CHECK(csv.rfind("L,R,count,stabilized\n0,0,1,0\n", 0) == 0);
}

TEST_CASE("BS(1,2) profile matches the Z[1/2] x| Z model") {
  GroupSpec g = make_bs(1, 2);
  const std::vector<long> grid{1, 2, 3, 4};
  PropernessProfile p = properness_profile(10, grid, g);

  using M = AffineModel;
  std::map<std::pair<long, std::string>, std::pair<M::Elem, std::size_t>> seen;
  seen[{0, "0"}] = {{0, 0}, 0};
  std::vector<M::Elem> frontier{{0, Rational(0)}};
  const std::vector<M::Elem> gens{{0, 1}, {0, -1}, {1, 0}, {-1, 0}};
  for (std::size_t len = 1; len <= 10; ++len) {
    std::vector<M::Elem> next;
    for (const auto& e : frontier) {
      for (const auto& s : gens) {
        M::Elem h = M::mul(e, s);
        if (seen.emplace(std::make_pair(h.first, h.second.get_str()), std::make_pair(h, len))
                .second)
          next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  // tree distances from the base coset by BFS
  std::map<std::pair<long, std::string>, long> dist{{M::coset(0, 0), 0}};
  std::vector<std::pair<long, Rational>> layer{{0, Rational(0)}};
  for (long d = 1; d <= 4; ++d) {
    std::vector<std::pair<long, Rational>> next;
    for (const auto& [k, a] : layer) {
      std::vector<std::pair<long, Rational>> nb{{k + 1, a}, {k - 1, a}, {k - 1, a + M::scale(k)}};
      for (const auto& [k2, a2] : nb) {
        if (dist.emplace(M::coset(k2, a2), d).second) next.push_back({k2, a2});
      }
    }
    layer = std::move(next);
  }
  for (std::size_t len = 0; len <= 10; ++len) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const long r = grid[j];
      std::size_t expected = 0;
      for (const auto& [key, val] : seen) {
        const auto& [e, l] = val;
        if (l > len || std::abs(e.first) > r || abs(e.second) > r) continue;
        auto it = dist.find(M::coset(e.first, e.second));
        if (it != dist.end() && it->second <= r) ++expected;
      }
      CHECK(p.counts[len][j] == expected);
    }
  }
}
