#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "windtree/permutation.hpp"
#include "windtree/rational.hpp"

namespace windtree {

/// Square-tiled translation surface: n unit squares, r(i) is the square glued
/// to the right of square i and u(i) the square glued on top of it.
class Origami {
 public:
  Origami() = default;
  Origami(Permutation r, Permutation u);

  /// Builds from text permutations (cycle or one-line form, 1-based).
  static Origami validate(int n, std::string_view r, std::string_view u);

  /// Text format: `n` on the first line, then `r=...` and `u=...` lines.
  /// Blank lines and lines starting with '#' are ignored.
  static Origami parse(std::string_view text);
  std::string to_text() const;

  int size() const { return r_.size(); }
  const Permutation& r() const { return r_; }
  const Permutation& u() const { return u_; }

  /// Relabels square i as pi(i).
  Origami relabeled(const Permutation& pi) const;

  friend bool operator==(const Origami&, const Origami&) = default;

 private:
  Permutation r_;
  Permutation u_;
};

bool is_connected(const Origami& o);

enum class ProfileKind { kAbelian, kQuadratic };

/// Multiset of zero/pole orders, kept sorted in decreasing order.
class SingularityProfile {
 public:
  SingularityProfile() = default;
  /// Rejects orders < -1, and order 0 unless allow_marked_points is set.
  explicit SingularityProfile(std::vector<int> orders, bool allow_marked_points = false);

  /// Accepts "2^4", "1^6,-1^6", "1,1,-1,-1", "H(2^6)", "Q(1^4,-1^4)"; "" or "H()" is empty.
  static SingularityProfile parse(std::string_view text);

  const std::vector<int>& orders() const { return orders_; }
  int size() const { return static_cast<int>(orders_.size()); }
  bool empty() const { return orders_.empty(); }
  int total_order() const;
  int count(int order) const;

  /// "H(2^4)" / "Q(1^6,-1^6)" style label.
  std::string label(ProfileKind kind) const;
  /// Exponent notation without the stratum letter, e.g. "2^4".
  std::string str() const;

  friend bool operator==(const SingularityProfile&, const SingularityProfile&) = default;

 private:
  std::vector<int> orders_;
};

/// Zeros read off the cycles of the commutator r u r^-1 u^-1: a cycle of length l
/// is a cone point of angle 2 pi l, i.e. a zero of order l - 1.
SingularityProfile singularity_profile(const Origami& o);

/// (sum + 2) / 2 for Abelian profiles, (sum + 4) / 4 for quadratic ones.
int genus(const SingularityProfile& p, ProfileKind kind);

struct Cylinder {
  int width = 0;
  int height = 0;
  friend auto operator<=>(const Cylinder&, const Cylinder&) = default;
};

struct CylinderDecomposition {
  std::vector<Cylinder> cylinders;

  /// Sum of width * height; equals the number of squares.
  int area() const;
  /// Sum of height / width over the cylinders.
  Rational modulus_sum() const;
  /// Cylinders sorted, for multiset comparison.
  std::vector<Cylinder> sorted() const;
};

/// Rows are the cycles of r. A row C is glued rigidly under the row u(C) when
/// u(r(i)) = r(u(i)) for every i in C; maximal rigid stacks are the cylinders.
CylinderDecomposition horizontal_cylinders(const Origami& o);

/// All sigma with sigma r sigma^-1 = r and sigma u sigma^-1 = u.
std::vector<Permutation> translation_automorphisms(const Origami& o);

/// All sigma with sigma r sigma^-1 = r^-1 and sigma u sigma^-1 = u^-1.
std::vector<Permutation> antiautomorphisms(const Origami& o);

bool is_translation_automorphism(const Origami& o, const Permutation& sigma);
bool is_antiautomorphism(const Origami& o, const Permutation& sigma);

/// Projection of squares onto the orbits of sigma, orbits numbered by their smallest square.
std::vector<int> quotient_projection(const Origami& o, const Permutation& sigma);

/// Quotient by a fixed-point-free translation involution; n/2 squares.
Origami quotient_by_translation_involution(const Origami& o, const Permutation& sigma);

/// Image of a translation automorphism that commutes with sigma on the quotient by sigma.
Permutation push_through_quotient(const Origami& o, const Permutation& sigma, const Permutation& tau);

}  // namespace windtree
