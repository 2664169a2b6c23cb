#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace windtree {

/// Bijection of {0, ..., n-1}. Text I/O uses the 1-based symbols of cycle notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws MalformedPermutation unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Disjoint cycles, 1-based: "(1,2,3)(4,5)". Fixed points may be omitted; "()" is the identity.
  static Permutation from_cycles(int n, std::string_view text);
  /// One-line form, 1-based: "[2,1,3]" or "2 1 3".
  static Permutation from_one_line(int n, std::string_view text);
  /// Dispatches on the leading character: '(' for cycles, anything else for one-line.
  static Permutation parse(int n, std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// pi * this * pi^-1.
  Permutation conjugate_by(const Permutation& pi) const;

  /// Orbits of the cyclic group, fixed points included, each starting at its smallest element.
  std::vector<std::vector<int>> cycles() const;
  std::vector<int> cycle_lengths() const;
  /// 1-based cycle notation with fixed points omitted; "()" for the identity.
  std::string cycle_string() const;
  std::string one_line_string() const;

  bool is_identity() const;
  bool is_involution() const;
  bool has_fixed_point() const;

  /// Right-to-left composition: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace windtree
