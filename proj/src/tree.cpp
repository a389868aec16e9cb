#include "bsk/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bsk {

namespace {

bool less_vec(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

bool operator<(const Vertex& a, const Vertex& b) {
  if (a.depth() != b.depth()) return a.depth() < b.depth();
  for (std::size_t i = 0; i < a.depth(); ++i) {
    const auto& x = a.syllables[i];
    const auto& y = b.syllables[i];
    if (x.sign != y.sign) return x.sign > y.sign;
    if (x.residue != y.residue) return less_vec(x.residue, y.residue);
  }
  return false;
}

Vertex Vertex::parent() const {
  Vertex p = *this;
  p.syllables.pop_back();
  return p;
}

Vertex base_vertex() { return {}; }

Vertex vertex_of(const NormalForm& w) {
  // In canonical form the x-power before each t^e is already the transversal
  // residue; the trailing x-power lies in G and is absorbed.
  Vertex u;
  u.syllables.reserve(w.tail.size());
  const IntVector* before = &w.head;
  for (const auto& syl : w.tail) {
    u.syllables.push_back({syl.sign, *before});
    before = &syl.x;
  }
  return u;
}

Vertex vertex_of(const Word& w, const GroupSpec& spec) { return vertex_of(britton_reduce(w, spec)); }

NormalForm coset_word(const Vertex& u, const GroupSpec& spec) {
  NormalForm nf = identity_nf(spec);
  for (const auto& s : u.syllables) {
    nf.last_x() = s.residue;
    nf.tail.push_back({s.sign, zero_vector(spec.dim())});
  }
  return nf;
}

Vertex act(const NormalForm& gamma, const Vertex& u, const GroupSpec& spec) {
  return vertex_of(nf_multiply(gamma, coset_word(u, spec), spec));
}

Vertex act(const Word& gamma, const Vertex& u, const GroupSpec& spec) {
  return act(britton_reduce(gamma, spec), u, spec);
}

std::vector<Vertex> neighbors(const Vertex& u, const GroupSpec& spec) {
  const NormalForm word = coset_word(u, spec);
  std::vector<Vertex> out;
  for (int sign : {1, -1}) {
    for (const auto& r : spec.residues_for(sign).representatives) {
      NormalForm nf = word;
      nf_append(nf, GenPower{r}, spec);
      nf_append(nf, StableLetter{sign}, spec);
      out.push_back(vertex_of(nf));
    }
  }
  return out;
}

std::size_t common_prefix(const Vertex& u, const Vertex& w) {
  std::size_t k = 0;
  const std::size_t m = std::min(u.depth(), w.depth());
  while (k < m && u.syllables[k] == w.syllables[k]) ++k;
  return k;
}

std::size_t distance(const Vertex& u, const Vertex& w) {
  return u.depth() + w.depth() - 2 * common_prefix(u, w);
}

EdgePath geodesic(const Vertex& u, const Vertex& w) {
  const std::size_t k = common_prefix(u, w);
  EdgePath path;
  Vertex cur = u;
  path.push_back(cur);
  while (cur.depth() > k) {
    cur.syllables.pop_back();
    path.push_back(cur);
  }
  for (std::size_t i = k; i < w.depth(); ++i) {
    cur.syllables.push_back(w.syllables[i]);
    path.push_back(cur);
  }
  return path;
}

bool adjacent(const Vertex& u, const Vertex& w) {
  if (u.depth() + 1 == w.depth()) return common_prefix(u, w) == u.depth();
  if (w.depth() + 1 == u.depth()) return common_prefix(u, w) == w.depth();
  return false;
}

Integer regular_ball_size(const Integer& degree, std::size_t radius) {
  Integer total = 1;
  Integer sphere = 1;
  for (std::size_t r = 1; r <= radius; ++r) {
    sphere *= (r == 1 ? degree : degree - 1);
    total += sphere;
  }
  return total;
}

TreeBall tree_ball(const Vertex& center, std::size_t radius, const GroupSpec& spec,
                   std::size_t max_vertices) {
  Integer expected = regular_ball_size(spec.degree(), radius);
  if (expected > Integer(static_cast<unsigned long>(max_vertices))) {
    throw ResourceError("tree ball of radius " + std::to_string(radius) + " has " +
                        expected.get_str() + " vertices, above the bound " +
                        std::to_string(max_vertices));
  }
  TreeBall ball{center, radius, {}, {}};
  std::set<Vertex> seen{center};
  std::vector<Vertex> frontier{center};
  for (std::size_t r = 0; r < radius; ++r) {
    std::vector<Vertex> next;
    for (const auto& u : frontier) {
      for (auto& w : neighbors(u, spec)) {
        if (!seen.insert(w).second) continue;
        ball.edges.push_back({u, w});
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  ball.vertices.assign(seen.begin(), seen.end());
  return ball;
}

std::string render(const Vertex& u) {
  if (u.is_base()) return "G";
  std::string s;
  for (std::size_t i = 0; i < u.depth(); ++i) {
    if (i) s += " | ";
    s += render_x(u.syllables[i].residue);
    s += u.syllables[i].sign > 0 ? "·t" : "·t^-1";
  }
  return s;
}

std::string to_dot(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges) {
  std::map<Vertex, std::size_t> id;
  std::ostringstream os;
  os << "graph T {\n";
  for (const auto& u : vertices) {
    std::size_t k = id.size();
    if (!id.emplace(u, k).second) continue;
    os << "  n" << k << " [label=\"" << render(u) << "\"];\n";
  }
  for (const auto& e : edges) {
    auto a = id.find(e.from);
    auto b = id.find(e.to);
    if (a == id.end() || b == id.end()) continue;
    os << "  n" << a->second << " -- n" << b->second << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_csv(const std::vector<Edge>& edges) {
  std::ostringstream os;
  os << "parent,child,direction,residue\n";
  for (const auto& e : edges) {
    const bool forward = e.to.depth() > e.from.depth();
    const Vertex& parent = forward ? e.from : e.to;
    const Vertex& child = forward ? e.to : e.from;
    const auto& last = child.syllables.back();
    os << '"' << render(parent) << "\",\"" << render(child) << "\","
       << (last.sign > 0 ? "up" : "down") << ",\"" << render_x(last.residue) << "\"\n";
  }
  return os.str();
}

}  // namespace bsk
