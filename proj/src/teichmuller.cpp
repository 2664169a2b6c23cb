#include "windtree/teichmuller.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "windtree/error.hpp"
#include "windtree/parallel.hpp"

namespace windtree {
namespace {

using Key = std::vector<int>;

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : key) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Interleaved key r'(0), u'(0), r'(1), u'(1), ... of the canonical labeling.
Key canonical_key(const Origami& o) {
  const int n = o.size();
  const auto& r = o.r().images();
  const auto& u = o.u().images();
  Key best;
  Key key(static_cast<std::size_t>(2 * n));
  std::vector<int> label(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));

  for (int s = 0; s < n; ++s) {
    std::fill(label.begin(), label.end(), -1);
    label[static_cast<std::size_t>(s)] = 0;
    order[0] = s;
    int next = 1;
    bool better = best.empty();
    bool worse = false;
    for (int k = 0; k < n && !worse; ++k) {
      if (k >= next) throw Error(ErrorKind::kNotConnected, "canonical form needs a connected origami");
      const int x = order[static_cast<std::size_t>(k)];
      for (int g = 0; g < 2; ++g) {
        const int y = (g == 0 ? r : u)[static_cast<std::size_t>(x)];
        int& ly = label[static_cast<std::size_t>(y)];
        if (ly < 0) {
          ly = next;
          order[static_cast<std::size_t>(next++)] = y;
        }
        const auto idx = static_cast<std::size_t>(2 * k + g);
        key[idx] = ly;
        if (!better) {
          if (ly < best[idx]) {
            better = true;
          } else if (ly > best[idx]) {
            worse = true;
            break;
          }
        }
      }
    }
    if (better && !worse) best = key;
  }
  return best;
}

Origami from_key(const Key& key) {
  const std::size_t n = key.size() / 2;
  std::vector<int> r(n);
  std::vector<int> u(n);
  for (std::size_t k = 0; k < n; ++k) {
    r[k] = key[2 * k];
    u[k] = key[2 * k + 1];
  }
  return Origami(Permutation(std::move(r)), Permutation(std::move(u)));
}

}  // namespace

Origami act_T(const Origami& o) { return Origami(o.r(), o.u() * o.r().inverse()); }

Origami act_S(const Origami& o) { return Origami(o.u(), o.r().inverse()); }

Origami canonical_form(const Origami& o) { return from_key(canonical_key(o)); }

std::size_t orbit_budget_from_env() {
  if (const char* env = std::getenv("WINDTREE_ORBIT_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultOrbitBudget;
}

OrbitData orbit(const Origami& seed, const OrbitOptions& options) {
  if (!is_connected(seed)) throw Error(ErrorKind::kNotConnected, "orbit needs a connected origami");

  std::vector<Key> keys{canonical_key(seed)};
  std::unordered_map<Key, std::size_t, KeyHash> index{{keys.front(), 0}};
  std::vector<std::size_t> frontier{0};

  while (!frontier.empty()) {
    std::vector<std::array<Key, 2>> images(frontier.size());
    parallel_for(frontier.size(), options.jobs, [&](std::size_t i) {
      const Origami o = from_key(keys[frontier[i]]);
      images[i] = {canonical_key(act_T(o)), canonical_key(act_S(o))};
    });
    std::vector<std::size_t> next;
    for (auto& pair : images) {
      for (auto& key : pair) {
        if (index.contains(key)) continue;
        if (keys.size() >= options.budget) {
          throw Error(ErrorKind::kOrbitBudgetExceeded,
                      "orbit has more than " + std::to_string(options.budget) + " surfaces");
        }
        index.emplace(key, keys.size());
        next.push_back(keys.size());
        keys.push_back(std::move(key));
      }
    }
    frontier = std::move(next);
  }

  OrbitData out;
  out.profile = singularity_profile(seed);
  out.representatives.resize(keys.size());
  out.cylinder_sums.resize(keys.size());
  parallel_for(keys.size(), options.jobs, [&](std::size_t i) {
    out.representatives[i] = from_key(keys[i]);
    out.cylinder_sums[i] = horizontal_cylinders(out.representatives[i]).modulus_sum();
  });
  return out;
}

Rational kappa_abelian(const SingularityProfile& p) {
  Rational s;
  for (int d : p.orders()) s += Rational(d * (d + 2), d + 1);
  return s / Rational(12);
}

LyapunovSumReport sum_lyapunov(const OrbitData& orbit, const SingularityProfile& profile) {
  if (orbit.size() == 0) throw Error(ErrorKind::kDomainViolation, "empty orbit");
  for (int d : profile.orders()) {
    if (d < 1) throw Error(ErrorKind::kDomainViolation, "Lyapunov sum needs an Abelian profile");
  }
  LyapunovSumReport report;
  report.kappa_abelian = kappa_abelian(profile);
  Rational sum;
  for (const auto& s : orbit.cylinder_sums) sum += s;
  report.mean_cylinder_sum = sum / Rational(Integer(static_cast<unsigned long>(orbit.size())));
  report.total = report.kappa_abelian + report.mean_cylinder_sum;
  return report;
}

Rational deficit(const SingularityProfile& quadratic) {
  Rational s;
  for (int d : quadratic.orders()) {
    if (d % 2 != 0) s += Rational(1, d + 2);
  }
  return s / Rational(4);
}

Rational lambda_plus_from_cover(const Rational& total, const SingularityProfile& quadratic) {
  const int g = genus(quadratic, ProfileKind::kQuadratic);
  if (g != 1) {
    throw Error(ErrorKind::kGenusPlusNotOne,
                quadratic.label(ProfileKind::kQuadratic) + " has genus " + std::to_string(g));
  }
  return (total - deficit(quadratic)) / Rational(2);
}

SingularityProfile orienting_cover_profile(const SingularityProfile& quadratic) {
  std::vector<int> orders;
  for (int d : quadratic.orders()) {
    if (d % 2 != 0) {
      if (d + 1 != 0) orders.push_back(d + 1);
    } else if (d > 0) {
      orders.push_back(d / 2);
      orders.push_back(d / 2);
    }
  }
  return SingularityProfile(std::move(orders));
}

SingularityProfile double_cover_profile(const SingularityProfile& quadratic, std::span<const int> ramified) {
  if (ramified.size() % 2 != 0) {
    throw Error(ErrorKind::kOddRamification, "a double cover has an even number of branch points");
  }
  std::vector<int> rest = quadratic.orders();
  std::vector<int> orders;
  for (int d : ramified) {
    const auto it = std::find(rest.begin(), rest.end(), d);
    if (it == rest.end()) {
      throw Error(ErrorKind::kDomainViolation,
                  "order " + std::to_string(d) + " is not available in " + quadratic.str());
    }
    rest.erase(it);
    if (2 * d + 2 != 0) orders.push_back(2 * d + 2);
  }
  for (int d : rest) {
    orders.push_back(d);
    orders.push_back(d);
  }
  return SingularityProfile(std::move(orders));
}

}  // namespace windtree
