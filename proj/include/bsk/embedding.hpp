#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "bsk/affine.hpp"
#include "bsk/presentation.hpp"
#include "bsk/tree.hpp"
#include "bsk/words.hpp"

namespace bsk {

/// Elements of word length <= radius over {x^{±e_i}, t^{±1}}, deduplicated by
/// canonical normal form. Elements are in breadth-first order; lengths[i] is
/// the word length of elements[i].
struct GroupBall {
  std::size_t radius = 0;
  std::vector<NormalForm> elements;
  std::vector<std::size_t> lengths;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  bool contains(const NormalForm& g) const { return index.count(render(g)) != 0; }
};

/// Default bound on the ball radius: 12 for n = 1, 8 otherwise.
std::size_t default_max_radius(const GroupSpec& spec);

/// The generating letters x^{e_1}, x^{-e_1}, ..., t, t^-1.
std::vector<Letter> generator_letters(const GroupSpec& spec);

/// Throws ResourceError when radius > max_radius.
GroupBall enumerate_ball(std::size_t radius, const GroupSpec& spec, std::size_t max_radius);
GroupBall enumerate_ball(std::size_t radius, const GroupSpec& spec);

struct Violation {
  std::string element;
  std::string detail;
};

struct CheckReport {
  std::string check;
  std::size_t elements = 0;
  std::vector<Violation> violations;  // sorted by element

  bool ok() const { return violations.empty(); }
  std::string summary() const;
  std::string to_json() const;
};

/// Every nontrivial element either moves the base vertex or is x^z with
/// z != 0 and nontrivial affine image; additionally no two ball elements share
/// the pair (gamma v, j_affine(gamma)).
CheckReport check_injectivity(const GroupBall& ball, const GroupSpec& spec);

/// {gamma : gamma v = v} == {gamma : t-length 0}, elementwise.
CheckReport check_stabilizer(const GroupBall& ball, const GroupSpec& spec);

/// count[L][j] = #{gamma in ball(L) : d_T(v, gamma v) <= R_j, |k| <= R_j, |a|_inf <= R_j}.
struct PropernessProfile {
  std::vector<long> thresholds;
  std::vector<std::vector<std::size_t>> counts;  // indexed [L][j], L = 0..Lmax
  std::vector<bool> stabilized;                  // per threshold, at Lmax

  std::size_t max_length() const { return counts.empty() ? 0 : counts.size() - 1; }
  std::string to_csv() const;
};

/// Stabilized means the count did not change over the last two increments of L.
PropernessProfile properness_profile(const GroupBall& ball, const std::vector<long>& thresholds,
                                     const GroupSpec& spec);
PropernessProfile properness_profile(std::size_t max_length, const std::vector<long>& thresholds,
                                     const GroupSpec& spec);

}  // namespace bsk
