// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bsk/affine.hpp"
#include "bsk/cli.hpp"
#include "bsk/embedding.hpp"
#include "bsk/haagerup.hpp"
#include "bsk/tree.hpp"
#include "bsk/words.hpp"

using namespace bsk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s  %2d  %-28s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

IntVector iv(long x) { return IntVector{Integer(x)}; }

GroupSpec ascending() {
  return make_matrix_group(IntMatrix{{2, 1}, {0, 2}}, IntMatrix::identity(2));
}

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<long> expo(-6, 6);
  Word w;
  for (std::size_t i = 0, n = len(rng); i < n; ++i) {
    const int k = kind(rng);
    if (k == 0) {
      w.emplace_back(GenPower{iv(expo(rng))});
    } else {
      w.emplace_back(StableLetter{k == 1 ? 1 : -1});
    }
  }
  return w;
}

std::vector<NormalForm> sample(const GroupBall& ball, std::size_t count, std::mt19937_64& rng) {
  std::vector<std::size_t> idx(ball.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<NormalForm> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(ball.elements[idx[i]]);
  return out;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

void relation_soundness() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> zd(-1000, 1000);
  std::size_t checked = 0, bad = 0;
  for (auto [p, q] : {std::pair{2L, 3L}, std::pair{5L, 2L}}) {
    GroupSpec g = make_bs(p, q);
    for (int i = 0; i < 100; ++i) {
      const long z = zd(rng);
      Word w{GenPower{iv(p * z)}, StableLetter{1}, GenPower{iv(-q * z)}, StableLetter{-1}};
      ++checked;
      if (!word_problem(w, g)) ++bad;
    }
  }
  // the CLI path on one instance
  std::ostringstream out, err;
  const int code = cli::run({"--bs", "2", "3", "wp", "x^14 t x^-21 t^-1"}, out, err);
  const bool cli_ok = code == cli::kExitOk && out.str() == "trivial\n";
  const double dt = seconds_since(t0);
  report(1, "relation soundness", bad == 0 && cli_ok && dt < 1.0,
         std::to_string(checked - bad) + "/" + std::to_string(checked) + " trivial, " +
             fmt("%.3f s", dt));
}

void britton_uniqueness() {
  const auto t0 = Clock::now();
  GroupSpec g = make_bs(2, 3);
  const std::vector<Letter> letters{GenPower{iv(1)}, GenPower{iv(-1)}, StableLetter{1},
                                    StableLetter{-1}};
  std::size_t words = 0, mismatches = 0;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len <= 8; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      ++words;
      const NormalForm left = britton_reduce(w, g, PinchOrder::Leftmost);
      const NormalForm right = britton_reduce(w, g, PinchOrder::Rightmost);
      if (!(left == right) || !(left == britton_reduce(w, g))) ++mismatches;
      if (len < 8) {
        for (const auto& l : letters) {
          Word v = w;
          v.push_back(l);
          next.push_back(std::move(v));
        }
      }
    }
    layer = std::move(next);
  }
  const double dt = seconds_since(t0);
  report(2, "Britton uniqueness probe", mismatches == 0 && dt <= 60.0,
         std::to_string(words) + " words, " + std::to_string(mismatches) + " mismatches, " +
             fmt("%.1f s", dt));
}

void injectivity_and_stabilizer(const GroupBall& b23, const GroupBall& basc) {
  const auto t0 = Clock::now();
  GroupSpec g = make_bs(2, 3);
  GroupSpec asc = ascending();
  const CheckReport i1 = check_injectivity(b23, g);
  const CheckReport i2 = check_injectivity(basc, asc);
  const double dt = seconds_since(t0);
  report(3, "injectivity", i1.ok() && i2.ok() && dt <= 60.0,
         "BS(2,3) L=6 " + i1.summary() + "; n=2 L=5 " + i2.summary() + ", " + fmt("%.1f s", dt));

  const CheckReport s1 = check_stabilizer(b23, g);
  const CheckReport s2 = check_stabilizer(basc, asc);
  report(4, "stabilizer identity", s1.ok() && s2.ok(),
         "BS(2,3) L=6 " + s1.summary() + "; n=2 L=5 " + s2.summary());
}

void tree_local_structure() {
  GroupSpec g = make_bs(2, 3);
  GroupSpec asc = ascending();
  const std::size_t d1 = neighbors(base_vertex(), g).size();
  const std::size_t d2 = neighbors(base_vertex(), asc).size();
  const std::size_t n1 = tree_ball(base_vertex(), 2, g).vertices.size();
  const std::size_t n2 = tree_ball(base_vertex(), 2, asc).vertices.size();
  const bool ok = d1 == 5 && d2 == 5 && g.degree() == 5 && asc.degree() == 5 && n1 == 26 &&
                  n1 == regular_ball_size(5, 2).get_ui() && n2 == regular_ball_size(5, 2).get_ui();
  report(5, "tree local structure", ok,
         "degrees " + std::to_string(d1) + "/" + std::to_string(d2) + ", R=2 ball " +
             std::to_string(n1) + "/" + std::to_string(n2));
}

void distance_consistency(const GroupBall& ball) {
  GroupSpec g = make_bs(2, 3);
  const TreeBall tb = tree_ball(base_vertex(), 6, g);
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& e : tb.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::map<Vertex, std::size_t> bfs{{base_vertex(), 0}};
  std::queue<Vertex> q;
  q.push(base_vertex());
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (const auto& w : adj[u]) {
      if (bfs.emplace(w, bfs[u] + 1).second) q.push(w);
    }
  }
  std::size_t bad = 0;
  for (const auto& gamma : ball.elements) {
    const Vertex u = act(gamma, base_vertex(), g);
    const std::size_t d = distance(base_vertex(), u);
    const auto it = bfs.find(u);
    if (d != gamma.t_length() || it == bfs.end() || it->second != d) ++bad;
  }
  report(6, "distance consistency", bad == 0,
         std::to_string(ball.size() - bad) + "/" + std::to_string(ball.size()) +
             " agree (tree ball " + std::to_string(tb.vertices.size()) + " vertices)");
}

void cocycle_identities(const GroupBall& ball) {
  const auto t0 = Clock::now();
  GroupSpec g = make_bs(2, 3);
  std::size_t bad_norm = 0;
  for (const auto& gamma : ball.elements) {
    const long d = static_cast<long>(distance(base_vertex(), act(gamma, base_vertex(), g)));
    if (cocycle(gamma, g).norm2() != d) ++bad_norm;
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  std::size_t bad_law = 0;
  for (int i = 0; i < 10000; ++i) {
    if (!cocycle_identity_check(ball.elements[pick(rng)], ball.elements[pick(rng)], g)) ++bad_law;
  }
  const double dt = seconds_since(t0);
  report(7, "cocycle identities", bad_norm == 0 && bad_law == 0 && dt <= 60.0,
         "norm2 mismatches " + std::to_string(bad_norm) + "/" + std::to_string(ball.size()) +
             ", law failures " + std::to_string(bad_law) + "/10000, " + fmt("%.1f s", dt));
}

void kernel_psd(const GroupBall& ball) {
  const auto t0 = Clock::now();
  GroupSpec g = make_bs(2, 3);
  std::mt19937_64 rng(11);
  double worst = 1.0;
  std::size_t reports = 0, bad = 0;
  for (int i = 0; i < 20; ++i) {
    const auto elems = sample(ball, 40, rng);
    for (double s : {0.1, 0.5, 1.0}) {
      const GramReport r = tree_gram(elems, s, g);
      ++reports;
      worst = std::min(worst, r.min_eig);
      if (r.min_eig < -1e-8 * 40) ++bad;
    }
  }
  const double dt = seconds_since(t0);
  report(8, "Haagerup kernel PSD", bad == 0 && dt <= 10.0,
         std::to_string(reports) + " reports, min eigenvalue " + format_real(worst) + ", " +
             fmt("%.2f s", dt));
}

void affine_layer() {
  GroupSpec g = make_bs(2, 3);
  std::mt19937_64 rng(13);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const Word u = random_word(rng, 10);
    const Word w = random_word(rng, 10);
    const AffineElement ju = j_affine(u, g);
    if (!(j_affine(concat(u, w), g) == aff_compose(ju, j_affine(w, g), g))) ++bad;
    if (!(ju == j_affine(britton_reduce(u, g), g))) ++bad;
  }
  const AffineElement txt = j_affine(parse_word("t x t", g), g);
  const bool ex = txt == AffineElement{2, {Rational(2, 3)}};
  report(9, "affine layer", bad == 0 && ex,
         std::to_string(bad) + " failures on 10000 pairs, j(t x t) = " + render(txt));
}

void properness() {
  const auto t0 = Clock::now();
  const std::vector<long> grid{1, 2, 4};
  bool all = true;
  std::string detail;
  for (auto [p, q] : {std::pair{1L, 2L}, std::pair{2L, 3L}}) {
    GroupSpec g = make_bs(p, q);
    const PropernessProfile prof = properness_profile(10, grid, g);
    detail += g.describe() + ":";
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const auto& c = prof.counts;
      detail += " R=" + std::to_string(grid[j]) + " " + std::to_string(c[8][j]) + "," +
                std::to_string(c[9][j]) + "," + std::to_string(c[10][j]) +
                (prof.stabilized[j] ? " ok" : " unstable");
      all = all && prof.stabilized[j];
    }
    detail += "; ";
  }
  const double dt = seconds_since(t0);
  report(10, "properness profiles", all && dt <= 60.0,
         detail + "counts at L=8,9,10, " + fmt("%.1f s", dt));
  if (!all) {
    // informational only: the verdict above stands
    const PropernessProfile ext = properness_profile(12, grid, make_bs(1, 2));
    std::string info;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      info += " R=" + std::to_string(grid[j]) + (ext.stabilized[j] ? " ok" : " unstable");
    }
    std::printf("      info: BS(1,2) at Lmax=12:%s\n", info.c_str());
  }
}

void explicit_witness() {
  GroupSpec g = make_bs(1, 2);
  const double psi = witness(britton_reduce(parse_word("t", g), g), 1.0, g);
  const double err = std::abs(psi - std::exp(-(1.0 + std::log(2.0))));

  const GroupBall ball = enumerate_ball(6, g);
  std::mt19937_64 rng(17);
  double worst = 1.0;
  bool psd = true;
  for (int i = 0; i < 10; ++i) {
    const GramReport r = witness_gram(sample(ball, 40, rng), 1.0, g);
    worst = std::min(worst, r.min_eig);
    psd = psd && r.min_eig >= -1e-8;
  }

  const auto rows = c0_profile(10, 1.0, g);
  bool decreasing = true;
  for (std::size_t len = 4; len < 10; ++len) {
    decreasing = decreasing && rows[len + 1].max_value < rows[len].max_value;
  }
  report(11, "explicit witness", err <= 1e-10 && psd && decreasing,
         "|psi_1(t) - e^-(1+ln2)| = " + fmt("%.1e", err) + ", witness Gram min eigenvalue " +
             format_real(worst) + ", c0 L=4..10 " +
             (decreasing ? "strictly decreasing" : "not strictly decreasing"));
}

void cross_oracle() {
  GroupSpec g = make_bs(2, 3);
  const std::vector<Letter> letters = generator_letters(g);
  std::string detail;
  bool ok = true;
  for (std::size_t radius = 0; radius <= 4; ++radius) {
    std::vector<Word> all{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= radius; ++len) {
      std::vector<Word> next;
      for (const auto& w : layer) {
        for (const auto& l : letters) {
          Word v = w;
          v.push_back(l);
          next.push_back(v);
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    std::vector<Word> kept;
    for (const auto& w : all) {
      const Word winv = invert(w);
      bool fresh = true;
      for (const auto& u : kept) {
        if (word_problem(concat(u, winv), g)) {
          fresh = false;
          break;
        }
      }
      if (fresh) kept.push_back(w);
    }
    const std::size_t by_nf = enumerate_ball(radius, g).size();
    ok = ok && by_nf == kept.size();
    detail += "L=" + std::to_string(radius) + ":" + std::to_string(by_nf) + "/" +
              std::to_string(kept.size()) + " ";
  }
  report(12, "cross-oracle ball counts", ok, detail + "(NF/pairwise)");
}

}  // namespace

int main() {
  const GroupBall b23 = enumerate_ball(6, make_bs(2, 3));
  const GroupBall basc = enumerate_ball(5, ascending());

  relation_soundness();
  britton_uniqueness();
  injectivity_and_stabilizer(b23, basc);
  tree_local_structure();
  distance_consistency(b23);
  cocycle_identities(b23);
  kernel_psd(b23);
  affine_layer();
  properness();
  explicit_witness();
  cross_oracle();

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
