#include "bsk/embedding.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace bsk {

std::size_t default_max_radius(const GroupSpec& spec) { return spec.dim() == 1 ? 12 : 8; }

std::vector<Letter> generator_letters(const GroupSpec& spec) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < spec.dim(); ++i) {
    letters.emplace_back(GenPower{unit_vector(spec.dim(), i, 1)});
    letters.emplace_back(GenPower{unit_vector(spec.dim(), i, -1)});
  }
  letters.emplace_back(StableLetter{1});
  letters.emplace_back(StableLetter{-1});
  return letters;
}

GroupBall enumerate_ball(std::size_t radius, const GroupSpec& spec, std::size_t max_radius) {
  if (radius > max_radius) {
    throw ResourceError("ball radius " + std::to_string(radius) + " exceeds the bound " +
                        std::to_string(max_radius) + " (set BSK_MAX_BALL to override)");
  }
  const auto letters = generator_letters(spec);
  GroupBall ball;
  ball.radius = radius;
  NormalForm one = identity_nf(spec);
  ball.index.emplace(render(one), 0);
  ball.elements.push_back(std::move(one));
  ball.lengths.push_back(0);

  std::size_t begin = 0;
  for (std::size_t len = 1; len <= radius; ++len) {
    const std::size_t end = ball.elements.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& letter : letters) {
        NormalForm g = ball.elements[i];
        nf_append(g, letter, spec);
        auto [it, fresh] = ball.index.emplace(render(g), ball.elements.size());
        if (!fresh) continue;
        ball.elements.push_back(std::move(g));
        ball.lengths.push_back(len);
      }
    }
    begin = end;
  }
  return ball;
}

GroupBall enumerate_ball(std::size_t radius, const GroupSpec& spec) {
  return enumerate_ball(radius, spec, default_max_radius(spec));
}

// ---------------------------------------------------------------------------

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << (ok() ? "OK: " : "FAIL: ") << violations.size() << " violations / " << elements
     << " elements";
  return os.str();
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["elements"] = elements;
  j["ok"] = ok();
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    j["violations"].push_back({{"element", v.element}, {"detail", v.detail}});
  }
  return j.dump(2);
}

namespace {

void sort_violations(CheckReport& r) {
  std::sort(r.violations.begin(), r.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.element, a.detail) < std::tie(b.element, b.detail);
            });
}

}  // namespace

CheckReport check_injectivity(const GroupBall& ball, const GroupSpec& spec) {
  CheckReport report{"injectivity", ball.size(), {}};
  const Vertex v = base_vertex();
  std::map<std::pair<std::string, std::string>, std::string> images;
  for (const auto& g : ball.elements) {
    const std::string name = render(g);
    const Vertex gv = act(g, v, spec);
    const AffineElement ga = j_affine(g, spec);
    if (!g.is_identity() && gv == v) {
      if (g.t_length() != 0) {
        report.violations.push_back({name, "fixes v but has t-length " +
                                               std::to_string(g.t_length())});
      } else if (ga.is_identity()) {
        report.violations.push_back({name, "fixes v and has trivial affine image"});
      }
    }
    auto [it, fresh] = images.emplace(std::make_pair(render(gv), render(ga)), name);
    if (!fresh) {
      report.violations.push_back(
          {name, "same tree and affine image as " + it->second + ": " + render(ga)});
    }
  }
  sort_violations(report);
  return report;
}

CheckReport check_stabilizer(const GroupBall& ball, const GroupSpec& spec) {
  CheckReport report{"stabilizer", ball.size(), {}};
  const Vertex v = base_vertex();
  for (const auto& g : ball.elements) {
    const bool fixes = act(g, v, spec) == v;
    const bool in_g = g.t_length() == 0;
    if (fixes && !in_g) report.violations.push_back({render(g), "fixes v but is not in G"});
    if (!fixes && in_g) report.violations.push_back({render(g), "in G but moves v"});
  }
  sort_violations(report);
  return report;
}

PropernessProfile properness_profile(const GroupBall& ball, const std::vector<long>& thresholds,
                                     const GroupSpec& spec) {
  PropernessProfile p;
  p.thresholds = thresholds;
  const std::size_t lmax = ball.radius;
  std::vector<std::vector<std::size_t>> per_length(lmax + 1,
                                                   std::vector<std::size_t>(thresholds.size(), 0));
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const NormalForm& g = ball.elements[i];
    const AffineElement e = j_affine(g, spec);
    const auto d_tree = static_cast<long>(g.t_length());
    const long height = e.k < 0 ? -e.k : e.k;
    const Rational shift = max_abs(e.a);
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
      const long r = thresholds[j];
      if (d_tree <= r && height <= r && shift <= r) ++per_length[ball.lengths[i]][j];
    }
  }
  p.counts.assign(lmax + 1, std::vector<std::size_t>(thresholds.size(), 0));
  for (std::size_t len = 0; len <= lmax; ++len) {
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
      p.counts[len][j] = per_length[len][j] + (len ? p.counts[len - 1][j] : 0);
    }
  }
  p.stabilized.assign(thresholds.size(), false);
  if (lmax >= 2) {
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
      p.stabilized[j] = p.counts[lmax][j] == p.counts[lmax - 1][j] &&
                        p.counts[lmax - 1][j] == p.counts[lmax - 2][j];
    }
  }
  return p;
}

PropernessProfile properness_profile(std::size_t max_length, const std::vector<long>& thresholds,
                                     const GroupSpec& spec) {
  return properness_profile(enumerate_ball(max_length, spec), thresholds, spec);
}

std::string PropernessProfile::to_csv() const {
  std::ostringstream os;
  os << "L,R,count,stabilized\n";
  for (std::size_t len = 0; len < counts.size(); ++len) {
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
      const bool flat = len >= 2 && counts[len][j] == counts[len - 1][j] &&
                        counts[len - 1][j] == counts[len - 2][j];
      os << len << ',' << thresholds[j] << ',' << counts[len][j] << ',' << (flat ? 1 : 0) << '\n';
    }
  }
  return os.str();
}

}  // namespace bsk
