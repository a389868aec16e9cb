#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bsk/presentation.hpp"
#include "bsk/words.hpp"

namespace bsk {

/// One step x^r t^sign of a canonical coset word.
struct VertexSyllable {
  int sign = 1;
  IntVector residue;
  friend bool operator==(const VertexSyllable&, const VertexSyllable&) = default;
};

/// A vertex of the Bass-Serre tree, i.e. the left coset
/// x^{r1} t^{e1} x^{r2} t^{e2} ... x^{rm} t^{em} G.
/// The empty syllable list is the base vertex v = G. Each r_i is a canonical
/// residue for e_i, and no step undoes the previous one (no e_i = -e_{i+1}
/// with r_{i+1} = 0), which makes the name unique.
struct Vertex {
  std::vector<VertexSyllable> syllables;

  std::size_t depth() const { return syllables.size(); }
  bool is_base() const { return syllables.empty(); }
  /// The neighbor one step closer to the base vertex; requires !is_base().
  Vertex parent() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

bool operator<(const Vertex& a, const Vertex& b);

/// Oriented edge of the tree.
struct Edge {
  Vertex from;
  Vertex to;
  friend bool operator==(const Edge&, const Edge&) = default;
};

using EdgePath = std::vector<Vertex>;

Vertex base_vertex();

/// Canonical vertex of w G.
Vertex vertex_of(const NormalForm& w);
Vertex vertex_of(const Word& w, const GroupSpec& spec);

/// The canonical coset word of u as a normal form (trailing x-power zero).
NormalForm coset_word(const Vertex& u, const GroupSpec& spec);

/// gamma . u
Vertex act(const NormalForm& gamma, const Vertex& u, const GroupSpec& spec);
Vertex act(const Word& gamma, const Vertex& u, const GroupSpec& spec);

/// Up-neighbors u x^r t G (r in residues_A) followed by down-neighbors
/// u x^r t^-1 G (r in residues_B); |det A| + |det B| vertices.
std::vector<Vertex> neighbors(const Vertex& u, const GroupSpec& spec);

std::size_t common_prefix(const Vertex& u, const Vertex& w);
std::size_t distance(const Vertex& u, const Vertex& w);
EdgePath geodesic(const Vertex& u, const Vertex& w);

/// True when w is u's parent or one of its children.
bool adjacent(const Vertex& u, const Vertex& w);

struct TreeBall {
  Vertex center;
  std::size_t radius = 0;
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // BFS tree edges, from nearer to farther
};

/// Default cap on the number of vertices a tree ball may hold.
inline constexpr std::size_t kDefaultMaxTreeVertices = 2'000'000;

/// All vertices at distance <= radius from center, by breadth-first expansion.
/// Throws ResourceError when the closed-form count exceeds max_vertices.
TreeBall tree_ball(const Vertex& center, std::size_t radius, const GroupSpec& spec,
                   std::size_t max_vertices = kDefaultMaxTreeVertices);

/// Size of a radius-R ball in the regular tree of the given degree.
Integer regular_ball_size(const Integer& degree, std::size_t radius);

/// "x^1·t | x^2·t^-1"; the base vertex renders as "G".
std::string render(const Vertex& u);

std::string to_dot(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges);
/// parent,child,direction,residue
std::string to_csv(const std::vector<Edge>& edges);

}  // namespace bsk
