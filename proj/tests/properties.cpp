#include "properties.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "windtree/billiard.hpp"
#include "windtree/siegel_veech.hpp"
#include "windtree/teichmuller.hpp"

namespace windtree::testing {
namespace {

int cell_square(const Unfolding& u, int x, int y, int ex, int ey) {
  const int k = u.cell_index[static_cast<std::size_t>(y * u.lattice.p + x)];
  return k < 0 ? -1 : Unfolding::square(k, ex, ey);
}

int floor_int(const Rational& v) { return static_cast<int>(ScalarTraits<Rational>::floor(v).to_double()); }

std::string profile_text(const Origami& o) { return singularity_profile(o).str(); }

}  // namespace

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

Origami random_connected_origami(int n, std::mt19937_64& rng) {
  for (;;) {
    Origami o(random_permutation(n, rng), random_permutation(n, rng));
    if (is_connected(o)) return o;
  }
}

bool relabeling_equivalent(const Origami& a, const Origami& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> images(static_cast<std::size_t>(a.size()));
  std::iota(images.begin(), images.end(), 0);
  do {
    if (a.relabeled(Permutation(images)) == b) return true;
  } while (std::next_permutation(images.begin(), images.end()));
  return false;
}

std::vector<SVValue> genus0_configurations(const SingularityProfile& quadratic) {
  const auto& d = quadratic.orders();
  const int k = quadratic.size();
  std::vector<int> zeros;
  std::vector<int> poles;
  for (int i = 0; i < k; ++i) (d[static_cast<std::size_t>(i)] > 0 ? zeros : poles).push_back(i);

  std::vector<SVValue> out;
  for (std::size_t a = 0; a < poles.size(); ++a) {
    for (std::size_t b = a + 1; b < poles.size(); ++b) {
      for (int z : zeros) out.push_back(c_pocket_detailed(d[static_cast<std::size_t>(z)], k));
    }
  }
  for (std::size_t a = 0; a < zeros.size(); ++a) {
    for (std::size_t b = a + 1; b < zeros.size(); ++b) {
      const int i = zeros[a];
      const int j = zeros[b];
      std::vector<int> others;
      for (int x = 0; x < k; ++x) {
        if (x != i && x != j) others.push_back(x);
      }
      for (unsigned mask = 0; mask < (1U << others.size()); ++mask) {
        int side = d[static_cast<std::size_t>(i)];
        int count = 1;
        for (std::size_t t = 0; t < others.size(); ++t) {
          if (mask & (1U << t)) {
            side += d[static_cast<std::size_t>(others[t])];
            ++count;
          }
        }
        if (side != -2) continue;
        out.push_back(
            c_dumbbell(d[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(j)], count, k - count, k));
      }
    }
  }
  return out;
}

SingularityProfile random_genus0_profile(std::mt19937_64& rng, int max_zero_order) {
  std::vector<int> orders;
  int total = 0;
  const int zeros = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int z = 0; z < zeros && total < max_zero_order; ++z) {
    const int d = std::uniform_int_distribution<int>(1, std::max(1, std::min(3, max_zero_order - total)))(rng);
    orders.push_back(d);
    total += d;
  }
  for (int p = 0; p < total + 4; ++p) orders.push_back(-1);
  return SingularityProfile(std::move(orders));
}

CellTable random_rectangle_table(std::mt19937_64& rng) {
  const auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int w = pick(2, 6);
  const int h = pick(2, 6);
  const int a = pick(1, w - 1);
  const int b = pick(1, h - 1);
  const int x0 = pick(0, w - 1);
  const int y0 = pick(0, h - 1);
  std::vector<Cell> cells;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) cells.push_back({(x0 + i) % w, (y0 + j) % h});
  return CellTable(w, h, std::move(cells));
}

std::vector<int> origami_square_sequence(const Unfolding& unfolding, const Rational& x0, const Rational& y0, long p,
                                         long q, std::size_t crossings) {
  const Origami& o = unfolding.surface;
  int s = cell_square(unfolding, floor_int(x0), floor_int(y0), 0, 0);
  Rational fx = x0 - Rational(floor_int(x0));
  Rational fy = y0 - Rational(floor_int(y0));
  std::vector<int> out;
  while (out.size() < crossings) {
    const Rational tx = (Rational(1) - fx) / Rational(q);
    const Rational ty = (Rational(1) - fy) / Rational(p);
    if (tx < ty) {
      fy += Rational(p) * tx;
      fx = Rational(0);
      s = o.r()(s);
    } else {
      fx += Rational(q) * ty;
      fy = Rational(0);
      s = o.u()(s);
    }
    out.push_back(s);
  }
  return out;
}

std::vector<int> billiard_square_sequence(const Unfolding& unfolding, const Rational& x0, const Rational& y0, long p,
                                          long q, std::size_t crossings) {
  const Billiard<Rational> billiard(unfolding.table, true);
  auto s = billiard.start(x0, y0, Rational(q), Rational(p));
  std::vector<int> out;
  while (out.size() < crossings) {
    billiard.step(s);
    const int cx = s.dx > Rational(0) ? floor_int(s.x) : -floor_int(-s.x) - 1;
    const int cy = s.dy > Rational(0) ? floor_int(s.y) : -floor_int(-s.y) - 1;
    out.push_back(cell_square(unfolding, cx, cy, s.ex, s.ey));
  }
  return out;
}

PropertyResult check_relabeling_invariance(std::size_t cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult result;
  for (std::size_t c = 0; c < cases; ++c, ++result.cases) {
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    const Origami o = random_connected_origami(n, rng);
    const Origami o2 = o.relabeled(random_permutation(n, rng));
    const SingularityProfile p = singularity_profile(o);
    const SingularityProfile p2 = singularity_profile(o2);
    const bool same = p == p2 && genus(p, ProfileKind::kAbelian) == genus(p2, ProfileKind::kAbelian) &&
                      horizontal_cylinders(o).sorted() == horizontal_cylinders(o2).sorted() &&
                      translation_automorphisms(o).size() == translation_automorphisms(o2).size() &&
                      antiautomorphisms(o).size() == antiautomorphisms(o2).size() &&
                      canonical_form(o) == canonical_form(o2);
    if (!same) result.fail(o.to_text());
  }
  return result;
}

PropertyResult check_cylinder_partition(std::size_t cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult result;
  for (std::size_t c = 0; c < cases; ++c, ++result.cases) {
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    const Origami o = random_connected_origami(n, rng);
    if (horizontal_cylinders(o).area() != n || horizontal_cylinders(act_S(o)).area() != n) result.fail(o.to_text());
  }
  return result;
}

PropertyResult check_orbit_stratum_constancy(std::size_t cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult result;
  for (std::size_t c = 0; c < cases; ++c, ++result.cases) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const Origami o = random_connected_origami(n, rng);
    const OrbitData data = orbit(o);
    const std::string expected = profile_text(o);
    std::set<std::string> members;
    bool ok = data.profile == singularity_profile(o);
    for (const auto& rep : data.representatives) {
      ok = ok && rep.size() == n && profile_text(rep) == expected;
      members.insert(rep.to_text());
    }
    // Starting from another member gives the same orbit.
    const auto& other = data.representatives[std::uniform_int_distribution<std::size_t>(0, data.size() - 1)(rng)];
    std::set<std::string> again;
    for (const auto& rep : orbit(other).representatives) again.insert(rep.to_text());
    ok = ok && again == members;
    if (!ok) result.fail(o.to_text());
  }
  return result;
}

PropertyResult check_genus_zero_null_sum(std::size_t cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult result;
  for (std::size_t c = 0; c < cases; ++c, ++result.cases) {
    const SingularityProfile p = random_genus0_profile(rng, 6);
    const SVValue c_area = c_area_genus0(p);
    const bool null_sum = kappa(p) + c_area.times_pi2_over_3() == Rational(0);
    const bool census = compose_c_area(genus0_configurations(p), p.size()) == c_area;
    if (!null_sum || !census) result.fail(p.label(ProfileKind::kQuadratic));
  }
  return result;
}

PropertyResult check_unfolding_equivalence(std::size_t cases, std::size_t crossings, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<CellTable> fixed = {make_classical_table(), make_chessboard_table(), make_diagonal_table(),
                                        make_cross_table(5, 5, {3, 1}, {1, 3}),
                                        make_cross_table(7, 7, {5, 3, 1}, {1, 3, 5})};
  constexpr long kDen = 97;
  PropertyResult result;
  for (std::size_t c = 0; c < cases; ++c, ++result.cases) {
    const CellTable table = c < fixed.size() ? fixed[c] : random_rectangle_table(rng);
    const Unfolding u = unfold_to_origami(table);
    const auto pick = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    const long p = pick(1, 7);
    const long q = pick(1, 7);
    const Cell cell = u.free_cells[static_cast<std::size_t>(pick(0, static_cast<long>(u.free_cells.size()) - 1))];
    Rational x0;
    Rational y0;
    do {
      x0 = Rational(cell.x) + Rational(pick(1, kDen - 1), kDen);
      y0 = Rational(cell.y) + Rational(pick(1, kDen - 1), kDen);
    } while ((Rational(p) * x0 - Rational(q) * y0).is_integer());
    if (origami_square_sequence(u, x0, y0, p, q, crossings) != billiard_square_sequence(u, x0, y0, p, q, crossings)) {
      result.fail(to_text(table) + " slope " + std::to_string(p) + "/" + std::to_string(q) + " from " + x0.str() +
                  "," + y0.str());
    }
  }
  return result;
}

}  // namespace windtree::testing
