#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "windtree/origami.hpp"
#include "windtree/rational.hpp"

namespace windtree {

/// Horizontal shear: (r, u) -> (r, u r^-1).
Origami act_T(const Origami& o);
/// Quarter turn: (r, u) -> (u, r^-1).
Origami act_S(const Origami& o);

/// Relabeling-invariant representative: over all start squares, label squares in
/// breadth-first order (r before u) and keep the labeling whose interleaved
/// sequence r'(0), u'(0), r'(1), u'(1), ... is lexicographically smallest.
Origami canonical_form(const Origami& o);

inline constexpr std::size_t kDefaultOrbitBudget = 1'000'000;

/// kDefaultOrbitBudget, unless WINDTREE_ORBIT_BUDGET holds a positive integer.
std::size_t orbit_budget_from_env();

struct OrbitOptions {
  std::size_t budget = kDefaultOrbitBudget;
  int jobs = 1;
};

/// SL(2,Z)-orbit of a connected origami, one canonical representative per surface.
struct OrbitData {
  std::vector<Origami> representatives;
  /// Sum of height/width over the horizontal cylinders, per representative.
  std::vector<Rational> cylinder_sums;
  SingularityProfile profile;

  std::size_t size() const { return representatives.size(); }
};

/// Breadth-first closure under act_T and act_S. Throws OrbitBudgetExceeded as
/// soon as more than options.budget surfaces are found.
OrbitData orbit(const Origami& seed, const OrbitOptions& options = {});

struct LyapunovSumReport {
  Rational kappa_abelian;
  Rational mean_cylinder_sum;
  /// lambda_1 + ... + lambda_g = kappa_abelian + mean_cylinder_sum.
  Rational total;
};

/// (1/12) sum d (d + 2) / (d + 1).
Rational kappa_abelian(const SingularityProfile& p);

LyapunovSumReport sum_lyapunov(const OrbitData& orbit, const SingularityProfile& profile);

/// (sum of minus exponents) - (sum of plus exponents) = (1/4) sum_{d odd} 1 / (d + 2).
Rational deficit(const SingularityProfile& quadratic);

/// lambda_1^+ of a genus-one quadratic surface from the exponent sum of its
/// orienting double cover: (total - deficit) / 2.
Rational lambda_plus_from_cover(const Rational& total, const SingularityProfile& quadratic);

/// Abelian profile of the canonical orienting double cover.
SingularityProfile orienting_cover_profile(const SingularityProfile& quadratic);

/// Quadratic profile of a double cover ramified over the given sub-multiset of orders.
SingularityProfile double_cover_profile(const SingularityProfile& quadratic, std::span<const int> ramified);

}  // namespace windtree
