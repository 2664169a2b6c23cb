#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "windtree/origami.hpp"

namespace windtree {

struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer wind-tree table: a width x height fundamental domain of unit cells,
/// some of them blocked by the obstacle. The pattern repeats periodically.
class CellTable {
 public:
  CellTable(int width, int height, std::vector<Cell> blocked);

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<Cell>& blocked() const { return blocked_; }
  int free_cell_count() const { return width_ * height_ - static_cast<int>(blocked_.size()); }

  /// Periodic lookup: any integer coordinates are accepted.
  bool is_blocked(int x, int y) const;

 private:
  int width_;
  int height_;
  std::vector<Cell> blocked_;
  std::vector<char> grid_;
};

struct Point {
  double x = 0;
  double y = 0;
};

/// Real wind-tree table: one right-angled obstacle polygon inside a width x height cell.
struct PolygonTable {
  double width = 1;
  double height = 1;
  std::vector<Point> vertices;
};

using WindTreeTable = std::variant<CellTable, PolygonTable>;

/// Cell form: line 1 "L1 L2", then one "x y" blocked cell per line.
/// Polygon form: a "POLY" line, then "L1 L2", then one "x y" vertex per line.
/// '#' starts a comment line.
WindTreeTable parse_table(std::string_view text);
std::string to_text(const CellTable& table);
std::string to_text(const PolygonTable& table);

/// Rasterizes a polygon with integer vertices into blocked cells (cell centers inside).
CellTable rasterize(const PolygonTable& table);

struct FamilyIndex {
  int m = 0;
  int convex_corners = 0;
  int reflex_corners = 0;
};

/// m = (#corners of angle pi/2) / 4 for a single obstacle symmetric under a
/// horizontal and a vertical reflection, checking #corners of angle 3pi/2 = 4(m-1).
FamilyIndex family_index(const CellTable& table);
FamilyIndex family_index(const PolygonTable& table);

/// Real dimension of B(m): 2m + 2.
int family_dimension(int m);
/// Complex dimension 2g + n - 2 of a stratum of quadratic differentials.
int stratum_dimension(const SingularityProfile& quadratic);

/// Lattice of periods {a (p, 0) + b (q, s)} in Hermite normal form, 0 <= q < p, s > 0.
struct PeriodLattice {
  int p = 1;
  int q = 0;
  int s = 1;

  int index() const { return p * s; }
  Cell reduce(int x, int y) const;
  /// Smallest t > 0 with (0, t) in the lattice.
  int vertical_period() const;
};

/// Unfolded table: four reflected copies of the free region, glued and
/// quotiented by a period lattice. Square of (cell k, sheet ex, ey) is 4k + 2ex + ey.
struct Unfolding {
  Origami surface;
  CellTable table;
  PeriodLattice lattice;
  std::vector<Cell> free_cells;
  std::vector<int> cell_index;  // p * s entries, -1 for blocked cells

  static int square(int cell, int ex, int ey) { return 4 * cell + 2 * ex + ey; }
  /// Square of an arbitrary lattice cell; -1 when the cell is blocked.
  int square_at(int x, int y, int ex, int ey) const;
};

/// Quotient by the full period lattice of the table.
Unfolding unfold_to_origami(const CellTable& table);

/// Quotient by the index-2 sublattice spanned by (L1/2, L2/2) and (L1/2, -L2/2).
Unfolding unfold_diagonal_sublattice(const CellTable& table);

struct WindTreeSymmetries {
  Permutation tau_h;  // swaps the sheets ex = 0, 1
  Permutation tau_v;  // swaps the sheets ey = 0, 1
  Permutation iota;   // half-turn of every sheet; inverts r and u
  int group_order = 0;
};

/// Finds tau_h, tau_v among the translation automorphisms and iota among the
/// anti-automorphisms, and checks that they generate (Z/2Z)^3.
WindTreeSymmetries windtree_symmetries(const Unfolding& unfolding);

/// 2x2 domain, one blocked cell: the classical wind-tree, m = 1.
CellTable make_classical_table();
/// 4x4 domain with square obstacles at (1,1), (3,1), (1,3): one obstacle out of four removed.
CellTable make_chessboard_table();
/// 4x4 domain with square obstacles at (1,1), (3,3): two obstacles on a diagonal removed.
CellTable make_diagonal_table();
/// Union of rectangles of widths[i] x heights[i] cells centered in a width x height domain
/// (each size must have the parity of the domain side). Widths decreasing and heights
/// increasing give a stepped cross with m = widths.size().
CellTable make_cross_table(int width, int height, const std::vector<int>& widths,
                           const std::vector<int>& heights);
/// The same stepped cross as a polygon centered in a width x height domain.
PolygonTable make_stepped_cross(double width, double height, const std::vector<double>& half_widths,
                                const std::vector<double>& half_heights);

}  // namespace windtree
