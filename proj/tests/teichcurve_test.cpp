#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "properties.hpp"
#include "windtree/error.hpp"
#include "windtree/table.hpp"
#include "windtree/teichmuller.hpp"

namespace windtree {
namespace {

Origami torus() { return Origami(Permutation::identity(1), Permutation::identity(1)); }

TEST(Action, TorusIsFixed) {
  EXPECT_EQ(act_T(torus()), torus());
  EXPECT_EQ(act_S(torus()), torus());
}

TEST(Action, Formulas) {
  const Origami o = Origami::validate(3, "(1,2)", "(1,3)");
  EXPECT_EQ(act_T(o).r(), o.r());
  EXPECT_EQ(act_T(o).u(), o.u() * o.r().inverse());
  EXPECT_EQ(act_S(o).r(), o.u());
  EXPECT_EQ(act_S(o).u(), o.r().inverse());
  // S has order four on the nose: S^2 inverts both permutations.
  const Origami s2 = act_S(act_S(o));
  EXPECT_EQ(s2.r(), o.r().inverse());
  EXPECT_EQ(s2.u(), o.u().inverse());
  EXPECT_EQ(act_S(act_S(s2)), o);
}

TEST(Action, PreservesProfileAndConnectivity) {
  std::mt19937_64 rng(31);
  for (int c = 0; c < 1000; ++c) {
    const int n = std::uniform_int_distribution<int>(1, 20)(rng);
    const Origami o = testing::random_connected_origami(n, rng);
    const SingularityProfile p = singularity_profile(o);
    EXPECT_EQ(singularity_profile(act_T(o)), p);
    EXPECT_EQ(singularity_profile(act_S(o)), p);
    EXPECT_TRUE(is_connected(act_T(o)));
    EXPECT_TRUE(is_connected(act_S(o)));
  }
}

std::vector<Origami> all_connected(int n) {
  std::vector<Permutation> perms;
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  do perms.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  std::vector<Origami> out;
  for (const auto& r : perms)
    for (const auto& u : perms) {
      Origami o(r, u);
      if (is_connected(o)) out.push_back(std::move(o));
    }
  return out;
}

TEST(CanonicalForm, ThreeSquaresInH2ByExhaustion) {
  std::set<std::string> classes;
  std::vector<Origami> reps;
  for (const auto& o : all_connected(3)) {
    if (singularity_profile(o) != SingularityProfile({2})) continue;
    if (classes.insert(canonical_form(o).to_text()).second) reps.push_back(o);
  }
  EXPECT_EQ(classes.size(), 3U);
  // Brute-force oracle: the classes are pairwise inequivalent.
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(testing::relabeling_equivalent(reps[i], reps[j]));
  const OrbitData data = orbit(reps[0]);
  EXPECT_EQ(data.size(), 3U);
}

TEST(CanonicalForm, AgreesWithBruteForceRelabeling) {
  std::mt19937_64 rng(32);
  for (int c = 0; c < 400; ++c) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const Origami a = testing::random_connected_origami(n, rng);
    const Origami b = testing::random_connected_origami(n, rng);
    EXPECT_EQ(canonical_form(a) == canonical_form(b), testing::relabeling_equivalent(a, b))
        << a.to_text() << b.to_text();
    EXPECT_TRUE(testing::relabeling_equivalent(a, canonical_form(a)));
  }
}

TEST(CanonicalForm, Idempotent) {
  std::mt19937_64 rng(33);
  for (int c = 0; c < 300; ++c) {
    const Origami o = testing::random_connected_origami(std::uniform_int_distribution<int>(1, 25)(rng), rng);
    EXPECT_EQ(canonical_form(canonical_form(o)), canonical_form(o));
  }
}

TEST(Orbit, TorusSumIsOne) {
  const OrbitData data = orbit(torus());
  EXPECT_EQ(data.size(), 1U);
  const LyapunovSumReport s = sum_lyapunov(data, data.profile);
  EXPECT_EQ(s.kappa_abelian, Rational(0));
  EXPECT_EQ(s.total, Rational(1));
}

TEST(Orbit, ThreeSquareH2Sum) {
  const OrbitData data = orbit(Origami::validate(3, "(1,2)", "(1,3)"));
  EXPECT_EQ(data.size(), 3U);
  const LyapunovSumReport s = sum_lyapunov(data, data.profile);
  EXPECT_EQ(s.kappa_abelian, Rational(2, 9));
  EXPECT_EQ(s.mean_cylinder_sum, Rational(10, 9));
  EXPECT_EQ(s.total, Rational(4, 3));
  std::multiset<Rational> sums(data.cylinder_sums.begin(), data.cylinder_sums.end());
  EXPECT_EQ(sums, (std::multiset<Rational>{Rational(1, 3), Rational(3, 2), Rational(3, 2)}));
}

TEST(Orbit, BudgetExceeded) {
  OrbitOptions options;
  options.budget = 2;
  try {
    orbit(Origami::validate(3, "(1,2)", "(1,3)"), options);
    FAIL() << "expected OrbitBudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOrbitBudgetExceeded);
  }
  options.budget = 3;
  EXPECT_EQ(orbit(Origami::validate(3, "(1,2)", "(1,3)"), options).size(), 3U);
}

TEST(Orbit, StratumConstancyProperty) {
  const auto result = testing::check_orbit_stratum_constancy(1000, 34);
  EXPECT_TRUE(result.ok()) << result.first_failure;
}

TEST(Orbit, ParallelMatchesSerial) {
  const Origami o = Origami::validate(14, "(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", "(1,3,13,8,2,14)(4,6,11,5,10,12)(7,9)");
  OrbitOptions parallel;
  parallel.jobs = 4;
  const OrbitData a = orbit(o);
  const OrbitData b = orbit(o, parallel);
  EXPECT_EQ(a.size(), b.size());
  EXPECT_EQ(sum_lyapunov(a, a.profile).total, sum_lyapunov(b, b.profile).total);
}

TEST(Lyapunov, KappaAbelian) {
  EXPECT_EQ(kappa_abelian(SingularityProfile({2})), Rational(2, 9));
  EXPECT_EQ(kappa_abelian(SingularityProfile({1, 1})), Rational(1, 4));
  EXPECT_EQ(kappa_abelian(SingularityProfile()), Rational(0));
}

TEST(Lyapunov, Deficit) {
  EXPECT_EQ(deficit(SingularityProfile::parse("1^6,-1^6")), Rational(2));
  EXPECT_EQ(deficit(SingularityProfile::parse("1^4,-1^4")), Rational(4, 3));
  EXPECT_EQ(deficit(SingularityProfile::parse("2,-1^4")), Rational(1));
  EXPECT_EQ(deficit(SingularityProfile::parse("2^2")), Rational(0));
}

TEST(Lyapunov, LambdaPlusRoundTrip) {
  const SingularityProfile q = SingularityProfile::parse("1^4,-1^4");
  for (const Rational& l : {Rational(20, 33), Rational(6, 11), Rational(2, 3)}) {
    const Rational total = Rational(2) * l + deficit(q);
    EXPECT_EQ(lambda_plus_from_cover(total, q), l);
  }
  try {
    lambda_plus_from_cover(Rational(1), SingularityProfile::parse("1,-1^5"));
    FAIL() << "expected GenusPlusNotOne";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGenusPlusNotOne);
  }
}

TEST(Covers, OrientingCoverProfile) {
  EXPECT_EQ(orienting_cover_profile(SingularityProfile::parse("1^4,-1^4")), SingularityProfile::parse("2^4"));
  EXPECT_EQ(orienting_cover_profile(SingularityProfile::parse("1^6,-1^6")), SingularityProfile::parse("2^6"));
  EXPECT_EQ(orienting_cover_profile(SingularityProfile::parse("2,-1^4")), SingularityProfile::parse("1,1"));
}

TEST(Covers, DoubleCoverProfile) {
  const std::vector<int> four_poles{-1, -1, -1, -1};
  const SingularityProfile lifted = double_cover_profile(SingularityProfile::parse("1,-1^5"), four_poles);
  EXPECT_EQ(lifted, SingularityProfile::parse("1,1,-1,-1"));
  EXPECT_EQ(genus(lifted, ProfileKind::kQuadratic), 1);
  const std::vector<int> three{-1, -1, -1};
  try {
    double_cover_profile(SingularityProfile::parse("1,-1^5"), three);
    FAIL() << "expected OddRamification";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOddRamification);
  }
}

// Copies of the classical table side by side, quotiented by the vertical reflection symmetry.
TEST(Covers, CyclicCoversOfClassicalQuotientKeepLambdaPlus) {
  const std::map<int, Rational> raw = {{1, Rational(2)}, {2, Rational(8, 3)}, {3, Rational(10, 3)}};
  for (const auto& [copies, expected_total] : raw) {
    std::vector<Cell> blocked;
    for (int i = 0; i < copies; ++i) blocked.push_back({2 * i + 1, 1});
    const Unfolding u = unfold_to_origami(CellTable(2 * copies, 2, blocked));
    ASSERT_EQ(u.surface.size(), 12 * copies);
    const Origami q = quotient_by_translation_involution(u.surface, windtree_symmetries(u).tau_v);
    const OrbitData data = orbit(q);
    const LyapunovSumReport s = sum_lyapunov(data, data.profile);
    EXPECT_EQ(s.total, expected_total) << copies;
    std::vector<int> orders(static_cast<std::size_t>(2 * copies), 1);
    orders.insert(orders.end(), static_cast<std::size_t>(2 * copies), -1);
    const SingularityProfile quadratic(orders);
    EXPECT_EQ(orienting_cover_profile(quadratic), data.profile) << copies;
    EXPECT_EQ(lambda_plus_from_cover(s.total, quadratic), Rational(2, 3)) << copies;
  }
}

}  // namespace
}  // namespace windtree
