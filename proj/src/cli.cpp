#include "bsk/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsk/affine.hpp"
#include "bsk/embedding.hpp"
#include "bsk/haagerup.hpp"
#include "bsk/tree.hpp"
#include "bsk/words.hpp"

namespace bsk::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer json_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer z;
    if (z.set_str(v.get<std::string>(), 10) != 0) {
      throw ConfigError("matrix entry is not an integer: " + v.get<std::string>());
    }
    return z;
  }
  throw ConfigError("matrix entry must be an integer or a decimal string");
}

IntMatrix json_matrix(const nlohmann::json& j, const char* name, std::size_t n) {
  if (!j.contains(name) || !j[name].is_array()) {
    throw ConfigError(std::string("spec file: missing matrix \"") + name + "\"");
  }
  const auto& rows = j[name];
  if (rows.size() != n) {
    throw ConfigError(std::string("spec file: ") + name + " has " + std::to_string(rows.size()) +
                      " rows, expected n = " + std::to_string(n));
  }
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw ConfigError(std::string("spec file: row ") + std::to_string(i) + " of " + name +
                        " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t k = 0; k < n; ++k) m(i, k) = json_integer(rows[i][k]);
  }
  return m;
}

}  // namespace

GroupSpec load_spec_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("spec file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long>() < 1) {
    throw ConfigError("spec file: \"n\" must be a positive integer");
  }
  const auto n = j["n"].get<std::size_t>();
  return make_matrix_group(json_matrix(j, "A", n), json_matrix(j, "B", n));
}

GroupSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open spec file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_spec_json(buf.str());
}

std::size_t max_ball_radius(const GroupSpec& spec) {
  if (const char* env = std::getenv("BSK_MAX_BALL")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw UsageError(std::string("BSK_MAX_BALL must be a positive integer, got '") + env + "'");
  }
  return default_max_radius(spec);
}

namespace {

struct Options {
  std::vector<std::string> bs;
  std::string spec_file;
  std::optional<std::size_t> length;
  std::vector<long> thresholds;
  double s = 1.0;
  std::optional<std::size_t> radius;
  std::string out_path;
  std::string format = "text";
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  std::string kernel = "tree";
  std::vector<std::string> words;
};

GroupSpec group_from(const Options& o) {
  if (!o.bs.empty()) {
    Integer p, q;
    if (o.bs.size() != 2 || p.set_str(o.bs[0], 10) != 0 || q.set_str(o.bs[1], 10) != 0) {
      throw UsageError("--bs expects two integers P Q");
    }
    return make_bs(p, q);
  }
  if (!o.spec_file.empty()) return load_spec_file(o.spec_file);
  throw UsageError("no group given: use --bs P Q or --spec FILE");
}

class Command {
 public:
  Command(const Options& o, const GroupSpec& spec, std::ostream& os)
      : o_(o), spec_(spec), os_(os) {}

  int run(const std::string& name) {
    if (name == "reduce") return reduce();
    if (name == "wp") return wp();
    if (name == "vertex") return vertex();
    if (name == "dist") return dist();
    if (name == "neighbors") return neighbors_cmd();
    if (name == "ball") return ball();
    if (name == "dot") return dot();
    if (name == "orbit") return orbit();
    if (name == "affine") return affine();
    if (name == "inject-check") return check(true);
    if (name == "stab-check") return check(false);
    if (name == "proper") return proper();
    if (name == "cocycle") return cocycle_cmd();
    if (name == "cocycle-check") return cocycle_check();
    if (name == "gram") return gram();
    if (name == "witness") return witness_cmd();
    if (name == "c0") return c0();
    throw UsageError("unknown command " + name);
  }

 private:
  const std::string& word_text(std::size_t i) const {
    if (i >= o_.words.size()) throw UsageError("missing word argument");
    return o_.words[i];
  }
  NormalForm element(std::size_t i) const {
    return britton_reduce(parse_word(word_text(i), spec_), spec_);
  }
  NormalForm element_or_identity(std::size_t i) const {
    return i < o_.words.size() ? element(i) : identity_nf(spec_);
  }
  bool json() const { return o_.format == "json"; }

  std::size_t length_or(std::size_t fallback) const { return o_.length.value_or(fallback); }
  GroupBall group_ball(std::size_t fallback) const {
    return enumerate_ball(length_or(fallback), spec_, max_ball_radius(spec_));
  }

  std::vector<NormalForm> sample(const GroupBall& ball, std::size_t count,
                                 std::mt19937_64& rng) const {
    if (count > ball.size()) {
      throw UsageError("cannot sample " + std::to_string(count) + " distinct elements from a ball of " +
                       std::to_string(ball.size()));
    }
    std::vector<std::size_t> idx(ball.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(count);
    std::sort(idx.begin(), idx.end());
    std::vector<NormalForm> out;
    for (auto i : idx) out.push_back(ball.elements[i]);
    return out;
  }

  int reduce() {
    const NormalForm nf = element(0);
    if (json()) {
      nlohmann::ordered_json j{{"input", word_text(0)}, {"normal_form", render(nf)},
                               {"t_length", nf.t_length()}};
      os_ << j.dump(2) << '\n';
    } else {
      os_ << render(nf) << '\n';
    }
    return kExitOk;
  }

  int wp() {
    os_ << (element(0).is_identity() ? "trivial" : "nontrivial") << '\n';
    return kExitOk;
  }

  int vertex() {
    os_ << render(vertex_of(element(0))) << '\n';
    return kExitOk;
  }

  int dist() {
    const Vertex a = vertex_of(element(0));
    if (o_.words.size() > 1) {
      os_ << distance(a, vertex_of(element(1))) << '\n';
    } else {
      os_ << distance(base_vertex(), a) << '\n';
    }
    return kExitOk;
  }

  int neighbors_cmd() {
    for (const auto& w : neighbors(vertex_of(element_or_identity(0)), spec_)) {
      os_ << render(w) << '\n';
    }
    return kExitOk;
  }

  TreeBall tree_window() const {
    return tree_ball(vertex_of(element_or_identity(0)), o_.radius.value_or(2), spec_);
  }

  int ball() {
    const TreeBall b = tree_window();
    if (o_.format == "dot") {
      os_ << to_dot(b.vertices, b.edges);
    } else if (o_.format == "csv") {
      os_ << to_csv(b.edges);
    } else if (json()) {
      std::vector<std::string> names;
      for (const auto& u : b.vertices) names.push_back(render(u));
      nlohmann::ordered_json j{{"center", render(b.center)}, {"radius", b.radius},
                               {"count", names.size()}, {"vertices", names}};
      os_ << j.dump(2) << '\n';
    } else {
      for (const auto& u : b.vertices) os_ << render(u) << '\n';
    }
    return kExitOk;
  }

  // With -L: the subtree spanned by the orbit of v under ball(L). Otherwise a tree ball.
  int dot() {
    if (!o_.length) {
      const TreeBall b = tree_window();
      os_ << to_dot(b.vertices, b.edges);
      return kExitOk;
    }
    const GroupBall g = group_ball(3);
    std::set<Vertex> vertices{base_vertex()};
    std::set<std::pair<Vertex, Vertex>> seen_edges;
    std::vector<Edge> edges;
    for (const auto& e : g.elements) {
      const EdgePath path = geodesic(base_vertex(), vertex_of(e));
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        vertices.insert(path[i + 1]);
        if (seen_edges.emplace(path[i], path[i + 1]).second) edges.push_back({path[i], path[i + 1]});
      }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return a.to < b.to;
    });
    os_ << to_dot({vertices.begin(), vertices.end()}, edges);
    return kExitOk;
  }

  int orbit() {
    const NormalForm g = element(0);
    const AffineElement e = j_affine(g, spec_);
    const HyperbolicPoint p = hyperbolic_orbit(e, spec_);
    const double d = hyperbolic_distance({0.0, 1.0}, p);
    if (json()) {
      nlohmann::ordered_json j{{"element", render(g)}, {"affine", render(e)},
                               {"x", p.x}, {"y", p.y}, {"distance", d}};
      os_ << j.dump(2) << '\n';
    } else {
      os_ << "point (" << format_real(p.x) << ", " << format_real(p.y) << ")\n"
          << "distance " << format_real(d) << '\n';
    }
    return kExitOk;
  }

  int affine() {
    os_ << render(j_affine(element(0), spec_)) << '\n';
    return kExitOk;
  }

  int check(bool injectivity) {
    const GroupBall g = group_ball(6);
    const CheckReport r = injectivity ? check_injectivity(g, spec_) : check_stabilizer(g, spec_);
    if (json()) {
      os_ << r.to_json() << '\n';
    } else {
      os_ << r.summary() << '\n';
      for (const auto& v : r.violations) os_ << "  " << v.element << ": " << v.detail << '\n';
    }
    return r.ok() ? kExitOk : kExitCheckFailed;
  }

  int proper() {
    const std::vector<long> grid = o_.thresholds.empty() ? std::vector<long>{1, 2, 4} : o_.thresholds;
    const PropernessProfile p = properness_profile(group_ball(10), grid, spec_);
    bool all = true;
    for (bool f : p.stabilized) all = all && f;
    if (o_.format == "csv") {
      os_ << p.to_csv();
    } else if (json()) {
      nlohmann::ordered_json j;
      j["note"] = "sublevel-set stabilization is finite evidence of properness, not a proof";
      j["thresholds"] = p.thresholds;
      j["counts"] = p.counts;
      j["stabilized"] = p.stabilized;
      os_ << j.dump(2) << '\n';
    } else {
      os_ << p.to_csv();
      for (std::size_t j = 0; j < grid.size(); ++j) {
        os_ << "R=" << grid[j] << (p.stabilized[j] ? " stabilized" : " not stabilized")
            << " (count " << p.counts.back()[j] << ")\n";
      }
    }
    return all ? kExitOk : kExitCheckFailed;
  }

  int cocycle_cmd() {
    const NormalForm g = element(0);
    const CocycleVector b = cocycle(g, spec_);
    os_ << render(b) << "norm2 " << b.norm2() << '\n';
    return kExitOk;
  }

  int cocycle_check() {
    if (o_.words.size() >= 2) {
      const bool ok = cocycle_identity_check(element(0), element(1), spec_);
      os_ << (ok ? "true" : "false") << '\n';
      return ok ? kExitOk : kExitCheckFailed;
    }
    const GroupBall g = group_ball(5);
    std::mt19937_64 rng(o_.seed);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    const std::size_t pairs = o_.samples.value_or(10000);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
      const NormalForm& a = g.elements[pick(rng)];
      const NormalForm& b = g.elements[pick(rng)];
      if (!cocycle_identity_check(a, b, spec_)) {
        ++failures;
        os_ << "  fails: " << render(a) << " , " << render(b) << '\n';
      }
    }
    os_ << (failures ? "FAIL: " : "OK: ") << failures << " failures / " << pairs << " pairs\n";
    return failures ? kExitCheckFailed : kExitOk;
  }

  int gram() {
    std::vector<NormalForm> elems;
    if (!o_.words.empty()) {
      for (std::size_t i = 0; i < o_.words.size(); ++i) elems.push_back(element(i));
    } else {
      std::mt19937_64 rng(o_.seed);
      elems = sample(group_ball(6), o_.samples.value_or(40), rng);
    }
    GramReport r;
    if (o_.kernel == "tree") {
      r = tree_gram(elems, o_.s, spec_);
    } else if (o_.kernel == "witness") {
      r = witness_gram(elems, o_.s, spec_);
    } else {
      throw UsageError("--kernel must be tree or witness");
    }
    os_ << (json() ? r.to_json() : r.summary()) << '\n';
    return r.psd ? kExitOk : kExitCheckFailed;
  }

  int witness_cmd() {
    os_ << format_real(witness(element(0), o_.s, spec_)) << '\n';
    return kExitOk;
  }

  int c0() {
    const auto rows = c0_profile(group_ball(10), o_.s, spec_);
    os_ << c0_to_csv(rows);
    return kExitOk;
  }

  const Options& o_;
  const GroupSpec& spec_;
  std::ostream& os_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"bsk: Baumslag-Solitar and HNN-over-Z^n toolkit", "bsk"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--bs", o.bs, "BS(P,Q): x^P = t x^Q t^-1")->expected(2);
  app.add_option("--spec", o.spec_file, "JSON group spec {\"n\",\"A\",\"B\"}");
  app.add_option("-L", o.length, "group ball radius (word length)");
  app.add_option("-R", o.thresholds, "properness thresholds")->delimiter(',');
  app.add_option("-s", o.s, "kernel parameter s > 0");
  app.add_option("--radius", o.radius, "tree ball radius");
  app.add_option("--out", o.out_path, "write output to FILE");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  app.add_option("--samples", o.samples, "sample size / number of random pairs");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--kernel", o.kernel, "gram kernel: tree | witness");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"reduce", "Britton normal form of WORD"},
      {"wp", "decide whether WORD is trivial"},
      {"vertex", "canonical tree vertex WORD.v"},
      {"dist", "d(v, WORD.v), or d(W1.v, W2.v)"},
      {"neighbors", "neighbors of WORD.v (default v)"},
      {"ball", "tree ball around WORD.v (--radius)"},
      {"dot", "DOT of a tree ball (--radius) or of the orbit of v under ball(L) (-L)"},
      {"orbit", "hyperbolic orbit point of WORD (n=1, lambda>0)"},
      {"affine", "image of WORD in Z x| Q^n"},
      {"inject-check", "injectivity of (j_T, j_aff) on ball(L)"},
      {"stab-check", "stabilizer of v equals G on ball(L)"},
      {"proper", "properness profile up to L"},
      {"cocycle", "edge cocycle b(WORD)"},
      {"cocycle-check", "cocycle law for W1 W2, or random pairs from ball(L)"},
      {"gram", "kernel Gram matrix PSD certificate"},
      {"witness", "witness value psi_s(WORD)"},
      {"c0", "sphere maxima of psi_s up to L"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->add_option("words", o.words, "words");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    const GroupSpec spec = group_from(o);
    code = Command(o, spec, buffer).run(app.get_subcommands().front()->get_name());
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "word syntax error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource bound exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedWitness& e) {
    out << "profile-only\n";
    err << "unsupported witness regime: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(o.out_path);
    if (!f) {
      err << "cannot write " << o.out_path << '\n';
      return kExitUsage;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace bsk::cli
