#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "windtree/origami.hpp"
#include "windtree/rational.hpp"
#include "windtree/table.hpp"

namespace windtree::testing {

Permutation random_permutation(int n, std::mt19937_64& rng);
Origami random_connected_origami(int n, std::mt19937_64& rng);

/// Brute-force relabeling equivalence: tries every permutation of the squares.
bool relabeling_equivalent(const Origami& a, const Origami& b);

/// Every pocket and dumbbell configuration of a genus-zero stratum, one constant each.
std::vector<SVValue> genus0_configurations(const SingularityProfile& quadratic);

/// Random genus-zero profile with zeros of total order at most max_zero_order.
SingularityProfile random_genus0_profile(std::mt19937_64& rng, int max_zero_order);

/// Random rectangle obstacle in a small domain, possibly crossing the domain edge.
CellTable random_rectangle_table(std::mt19937_64& rng);

/// Squares visited by the straight line of slope p/q (p, q > 0) from (x0, y0) on the
/// unfolded surface, computed from r and u alone.
std::vector<int> origami_square_sequence(const Unfolding& unfolding, const Rational& x0, const Rational& y0, long p,
                                         long q, std::size_t crossings);

/// The same sequence read off the exact billiard: cell and reflection parity after each event.
std::vector<int> billiard_square_sequence(const Unfolding& unfolding, const Rational& x0, const Rational& y0, long p,
                                          long q, std::size_t crossings);

struct PropertyResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

PropertyResult check_relabeling_invariance(std::size_t cases, std::uint64_t seed);
PropertyResult check_cylinder_partition(std::size_t cases, std::uint64_t seed);
PropertyResult check_orbit_stratum_constancy(std::size_t cases, std::uint64_t seed);
PropertyResult check_genus_zero_null_sum(std::size_t cases, std::uint64_t seed);
/// Random integer tables, rational slopes and generic start points.
PropertyResult check_unfolding_equivalence(std::size_t cases, std::size_t crossings, std::uint64_t seed);

}  // namespace windtree::testing
