#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bsk/affine.hpp"
#include "bsk/embedding.hpp"
#include "bsk/tree.hpp"
#include "bsk/words.hpp"

namespace bsk {

/// A finitely supported signed combination of tree edges.
///
/// Each unordered edge is keyed by its endpoint farther from the base vertex
/// (the parent is then implied); the coefficient is for the orientation
/// parent -> child, so reversing an edge negates it. Zero coefficients are
/// never stored, which makes equality a plain map comparison.
class CocycleVector {
 public:
  void add(const Edge& e, long coefficient);
  CocycleVector operator+(const CocycleVector& other) const;
  CocycleVector operator-() const;

  /// Each unordered edge has unit norm.
  long norm2() const;
  std::size_t support_size() const { return coeffs_.size(); }
  const std::map<Vertex, long>& coefficients() const { return coeffs_; }

  friend bool operator==(const CocycleVector&, const CocycleVector&) = default;

 private:
  std::map<Vertex, long> coeffs_;
};

/// b(gamma): the edges of the geodesic from v to gamma v, oriented away from v.
CocycleVector cocycle(const NormalForm& gamma, const GroupSpec& spec);

/// gamma . b, relabelling every edge (u, w) as (gamma u, gamma w).
CocycleVector translate(const NormalForm& gamma, const CocycleVector& b, const GroupSpec& spec);

/// b(gamma delta) == b(gamma) + gamma . b(delta), exactly.
bool cocycle_identity_check(const NormalForm& gamma, const NormalForm& delta,
                            const GroupSpec& spec);

std::string render(const CocycleVector& b);

/// Fixed 12-significant-digit rendering used in every text output.
std::string format_real(double x);

struct GramReport {
  std::vector<std::string> elements;
  std::string kernel;
  double s = 0.0;
  std::vector<std::vector<double>> matrix;
  double min_eig = 0.0;
  double tol = 0.0;
  bool psd = false;

  std::string to_json(bool include_matrix = false) const;
  std::string summary() const;
};

/// PSD verdicts use tol = kGramTolerancePerDim * dim.
inline constexpr double kGramTolerancePerDim = 1e-8;

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const std::vector<std::vector<double>>& m);

/// K_ij = exp(-s d_T(gamma_i v, gamma_j v)). Throws InputError on s <= 0 or
/// duplicate elements.
GramReport tree_gram(const std::vector<NormalForm>& elements, double s, const GroupSpec& spec);

struct HyperbolicPoint {
  double x = 0.0;
  double y = 1.0;
};

enum class WitnessRegime {
  Hyperbolic,   // n = 1, lambda > 0: z -> lambda^k z + a on the upper half-plane
  Isometric,    // Lambda = +-I: |k| + |a|_1
  ProfileOnly,  // no explicit affine witness
};

WitnessRegime witness_regime(const GroupSpec& spec);
std::string to_string(WitnessRegime r);

/// Orbit of the base point (0, 1) under (k, a): (a, lambda^k).
/// Throws UnsupportedWitness outside the Hyperbolic regime.
HyperbolicPoint hyperbolic_orbit(const AffineElement& e, const GroupSpec& spec);
/// z -> lambda^k z + a applied to P.
HyperbolicPoint apply_isometry(const AffineElement& e, const HyperbolicPoint& p,
                               const GroupSpec& spec);
double hyperbolic_distance(const HyperbolicPoint& p, const HyperbolicPoint& q);

/// psi_s(gamma) = exp(-s (d_T(v, gamma v) + D_aff(gamma))).
/// Throws UnsupportedWitness in the ProfileOnly regime.
double witness(const NormalForm& gamma, double s, const GroupSpec& spec);

/// K_ij = psi_s(gamma_i^{-1} gamma_j), assembled from orbit points directly.
GramReport witness_gram(const std::vector<NormalForm>& elements, double s, const GroupSpec& spec);

struct C0Row {
  std::size_t length = 0;
  double max_value = 0.0;
  std::string argmax;
};

/// Max of psi_s over each word-length sphere of the ball.
std::vector<C0Row> c0_profile(const GroupBall& ball, double s, const GroupSpec& spec);
std::vector<C0Row> c0_profile(std::size_t max_length, double s, const GroupSpec& spec);
std::string c0_to_csv(const std::vector<C0Row>& rows);

}  // namespace bsk
