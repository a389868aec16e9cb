#include "bsk/haagerup.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace bsk {

// ---------------------------------------------------------------------------
// Edge cocycle

void CocycleVector::add(const Edge& e, long coefficient) {
  if (coefficient == 0) return;
  const bool forward = e.to.depth() == e.from.depth() + 1;
  const Vertex& child = forward ? e.to : e.from;
  long& c = coeffs_[child];
  c += forward ? coefficient : -coefficient;
  if (c == 0) coeffs_.erase(child);
}

CocycleVector CocycleVector::operator+(const CocycleVector& other) const {
  CocycleVector r = *this;
  for (const auto& [child, c] : other.coeffs_) r.add({child.parent(), child}, c);
  return r;
}

CocycleVector CocycleVector::operator-() const {
  CocycleVector r = *this;
  for (auto& [child, c] : r.coeffs_) c = -c;
  return r;
}

long CocycleVector::norm2() const {
  long s = 0;
  for (const auto& [child, c] : coeffs_) s += c * c;
  return s;
}

CocycleVector cocycle(const NormalForm& gamma, const GroupSpec& /*spec*/) {
  CocycleVector b;
  const EdgePath path = geodesic(base_vertex(), vertex_of(gamma));
  for (std::size_t i = 0; i + 1 < path.size(); ++i) b.add({path[i], path[i + 1]}, 1);
  return b;
}

CocycleVector translate(const NormalForm& gamma, const CocycleVector& b, const GroupSpec& spec) {
  CocycleVector r;
  for (const auto& [child, c] : b.coefficients()) {
    r.add({act(gamma, child.parent(), spec), act(gamma, child, spec)}, c);
  }
  return r;
}

bool cocycle_identity_check(const NormalForm& gamma, const NormalForm& delta,
                            const GroupSpec& spec) {
  const CocycleVector lhs = cocycle(nf_multiply(gamma, delta, spec), spec);
  const CocycleVector rhs = cocycle(gamma, spec) + translate(gamma, cocycle(delta, spec), spec);
  return lhs == rhs;
}

std::string render(const CocycleVector& b) {
  std::ostringstream os;
  for (const auto& [child, c] : b.coefficients()) {
    os << (c > 0 ? "+" : "") << c << " [" << render(child.parent()) << " -> " << render(child)
       << "]\n";
  }
  return os.str();
}

std::string format_real(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

// ---------------------------------------------------------------------------
// Gram matrices

double min_eigenvalue(const std::vector<std::vector<double>>& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  if (n == 0) return 0.0;
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) k(i, j) = m[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

namespace {

void require_distinct(const std::vector<NormalForm>& elements) {
  std::set<std::string> seen;
  for (const auto& g : elements) {
    if (!seen.insert(render(g)).second) {
      throw InputError("duplicate element in Gram sample: " + render(g));
    }
  }
}

void require_positive(double s) {
  if (!(s > 0.0)) throw InputError("kernel parameter s must be positive, got " + format_real(s));
}

GramReport finish_report(const std::vector<NormalForm>& elements, std::string kernel, double s,
                         std::vector<std::vector<double>> matrix) {
  GramReport r;
  for (const auto& g : elements) r.elements.push_back(render(g));
  r.kernel = std::move(kernel);
  r.s = s;
  r.matrix = std::move(matrix);
  r.min_eig = min_eigenvalue(r.matrix);
  r.tol = kGramTolerancePerDim * static_cast<double>(r.matrix.size());
  r.psd = r.min_eig >= -r.tol;
  return r;
}

}  // namespace

GramReport tree_gram(const std::vector<NormalForm>& elements, double s,
                     const GroupSpec& /*spec*/) {
  require_positive(s);
  require_distinct(elements);
  const std::size_t n = elements.size();
  std::vector<Vertex> orbit;
  orbit.reserve(n);
  for (const auto& g : elements) orbit.push_back(vertex_of(g));
  std::vector<std::vector<double>> k(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      k[i][j] = k[j][i] = std::exp(-s * static_cast<double>(distance(orbit[i], orbit[j])));
  return finish_report(elements, "tree", s, std::move(k));
}

std::string GramReport::to_json(bool include_matrix) const {
  nlohmann::ordered_json j;
  j["kernel"] = kernel;
  j["s"] = s;
  j["dimension"] = elements.size();
  j["elements"] = elements;
  j["min_eig"] = min_eig;
  j["tol"] = tol;
  j["psd"] = psd;
  if (include_matrix) j["matrix"] = matrix;
  return j.dump(2);
}

std::string GramReport::summary() const {
  std::ostringstream os;
  os << (psd ? "PSD" : "NOT PSD") << ": kernel=" << kernel << " s=" << format_real(s)
     << " dim=" << elements.size() << " min_eig=" << format_real(min_eig)
     << " tol=" << format_real(tol);
  return os.str();
}

// ---------------------------------------------------------------------------
// Affine witness

WitnessRegime witness_regime(const GroupSpec& spec) {
  if (spec.dim() == 1 && spec.lambda()(0, 0) > 0) return WitnessRegime::Hyperbolic;
  if (spec.lambda().is_scalar(1) || spec.lambda().is_scalar(-1)) return WitnessRegime::Isometric;
  return WitnessRegime::ProfileOnly;
}

std::string to_string(WitnessRegime r) {
  switch (r) {
    case WitnessRegime::Hyperbolic: return "hyperbolic";
    case WitnessRegime::Isometric: return "isometric";
    case WitnessRegime::ProfileOnly: return "profile-only";
  }
  return "?";
}

namespace {

void require_hyperbolic(const GroupSpec& spec) {
  if (witness_regime(spec) != WitnessRegime::Hyperbolic) {
    throw UnsupportedWitness("hyperbolic witness needs n = 1 and lambda > 0; " + spec.describe() +
                             " is " + to_string(witness_regime(spec)));
  }
}

double lambda_to(std::int64_t k, const GroupSpec& spec) {
  return spec.lambda_power(k)(0, 0).get_d();
}

Rational l1_norm(const RationalVector& a) {
  Rational s = 0;
  for (const auto& c : a) s += abs(c);
  return s;
}

}  // namespace

HyperbolicPoint hyperbolic_orbit(const AffineElement& e, const GroupSpec& spec) {
  require_hyperbolic(spec);
  return {e.a[0].get_d(), lambda_to(e.k, spec)};
}

HyperbolicPoint apply_isometry(const AffineElement& e, const HyperbolicPoint& p,
                               const GroupSpec& spec) {
  require_hyperbolic(spec);
  const double scale = lambda_to(e.k, spec);
  return {scale * p.x + e.a[0].get_d(), scale * p.y};
}

double hyperbolic_distance(const HyperbolicPoint& p, const HyperbolicPoint& q) {
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y));
}

double witness(const NormalForm& gamma, double s, const GroupSpec& spec) {
  const double d_tree = static_cast<double>(gamma.t_length());
  const AffineElement e = j_affine(gamma, spec);
  switch (witness_regime(spec)) {
    case WitnessRegime::Hyperbolic:
      return std::exp(-s * (d_tree + hyperbolic_distance({0.0, 1.0}, hyperbolic_orbit(e, spec))));
    case WitnessRegime::Isometric: {
      const double d_aff = static_cast<double>(e.k < 0 ? -e.k : e.k) + l1_norm(e.a).get_d();
      return std::exp(-s * (d_tree + d_aff));
    }
    case WitnessRegime::ProfileOnly: break;
  }
  throw UnsupportedWitness("no explicit affine witness for " + spec.describe() +
                           " (profile-only); tree_gram and proper remain available");
}

GramReport witness_gram(const std::vector<NormalForm>& elements, double s,
                        const GroupSpec& spec) {
  require_positive(s);
  require_distinct(elements);
  const WitnessRegime regime = witness_regime(spec);
  if (regime == WitnessRegime::ProfileOnly) {
    throw UnsupportedWitness("no explicit affine witness for " + spec.describe() +
                             " (profile-only); use tree_gram instead");
  }
  const std::size_t n = elements.size();
  std::vector<Vertex> orbit;
  std::vector<AffineElement> images;
  std::vector<HyperbolicPoint> points;
  for (const auto& g : elements) {
    orbit.push_back(vertex_of(g));
    images.push_back(j_affine(g, spec));
    if (regime == WitnessRegime::Hyperbolic) points.push_back(hyperbolic_orbit(images.back(), spec));
  }
  std::vector<std::vector<double>> k(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = static_cast<double>(distance(orbit[i], orbit[j]));
      if (regime == WitnessRegime::Hyperbolic) {
        d += hyperbolic_distance(points[i], points[j]);
      } else {
        const std::int64_t dk = images[j].k - images[i].k;
        RationalVector diff = images[j].a + (-images[i].a);
        d += static_cast<double>(dk < 0 ? -dk : dk) + l1_norm(diff).get_d();
      }
      k[i][j] = k[j][i] = std::exp(-s * d);
    }
  }
  return finish_report(elements, "witness-" + to_string(regime), s, std::move(k));
}

std::vector<C0Row> c0_profile(const GroupBall& ball, double s, const GroupSpec& spec) {
  require_positive(s);
  std::vector<C0Row> rows(ball.radius + 1);
  std::vector<bool> filled(ball.radius + 1, false);
  for (std::size_t len = 0; len <= ball.radius; ++len) rows[len].length = len;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const double psi = witness(ball.elements[i], s, spec);
    C0Row& row = rows[ball.lengths[i]];
    const std::string name = render(ball.elements[i]);
    const std::size_t len = ball.lengths[i];
    if (!filled[len] || psi > row.max_value || (psi == row.max_value && name < row.argmax)) {
      row.max_value = psi;
      row.argmax = name;
      filled[len] = true;
    }
  }
  return rows;
}

std::vector<C0Row> c0_profile(std::size_t max_length, double s, const GroupSpec& spec) {
  return c0_profile(enumerate_ball(max_length, spec), s, spec);
}

std::string c0_to_csv(const std::vector<C0Row>& rows) {
  std::ostringstream os;
  os << "L,max_psi,argmax\n";
  for (const auto& r : rows) {
    os << r.length << ',' << format_real(r.max_value) << ",\"" << r.argmax << "\"\n";
  }
  return os.str();
}

}  // namespace bsk
