#include "windtree/table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "windtree/error.hpp"

namespace windtree {
namespace {

int floor_mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

int floor_div(int a, int m) { return (a - floor_mod(a, m)) / m; }

// Rejects diagonal-only contacts and obstacle components that wrap around the
// period torus. Returns the components in unrolled coordinates.
std::vector<std::vector<Cell>> obstacle_components(const CellTable& t) {
  const int w = t.width();
  const int h = t.height();
  for (int vx = 0; vx < w; ++vx) {
    for (int vy = 0; vy < h; ++vy) {
      const bool a = t.is_blocked(vx - 1, vy - 1);
      const bool b = t.is_blocked(vx, vy - 1);
      const bool c = t.is_blocked(vx - 1, vy);
      const bool d = t.is_blocked(vx, vy);
      if ((a && d && !b && !c) || (b && c && !a && !d)) {
        throw Error(ErrorKind::kObstaclesTouch,
                    "blocked cells meet only at the corner (" + std::to_string(vx) + "," + std::to_string(vy) + ")");
      }
    }
  }

  std::map<Cell, Cell> unrolled;  // torus cell -> unrolled coordinates
  std::vector<std::vector<Cell>> components;
  for (const Cell& start : t.blocked()) {
    if (unrolled.contains(start)) continue;
    std::vector<Cell> component{start};
    unrolled[start] = start;
    for (std::size_t head = 0; head < component.size(); ++head) {
      const Cell c = component[head];
      const Cell steps[] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
      for (const Cell& n : steps) {
        if (!t.is_blocked(n.x, n.y)) continue;
        const Cell torus{floor_mod(n.x, w), floor_mod(n.y, h)};
        const auto it = unrolled.find(torus);
        if (it == unrolled.end()) {
          unrolled[torus] = n;
          component.push_back(n);
        } else if (it->second != n) {
          throw Error(ErrorKind::kObstacleTouchesBoundary, "an obstacle wraps around the fundamental domain");
        }
      }
    }
    components.push_back(std::move(component));
  }
  return components;
}

void check_pattern_invariant(const CellTable& t, const PeriodLattice& lattice) {
  for (int x = 0; x < t.width(); ++x) {
    for (int y = 0; y < t.height(); ++y) {
      const bool b = t.is_blocked(x, y);
      if (t.is_blocked(x + lattice.p, y) != b || t.is_blocked(x + lattice.q, y + lattice.s) != b) {
        throw Error(ErrorKind::kPatternNotSublatticeInvariant,
                    "obstacle pattern is not invariant under the period lattice");
      }
    }
  }
}

Unfolding unfold(const CellTable& table, const PeriodLattice& lattice) {
  obstacle_components(table);
  check_pattern_invariant(table, lattice);

  Unfolding out{Origami(Permutation::identity(1), Permutation::identity(1)), table, lattice, {}, {}};
  out.cell_index.assign(static_cast<std::size_t>(lattice.index()), -1);
  for (int y = 0; y < lattice.s; ++y) {
    for (int x = 0; x < lattice.p; ++x) {
      if (table.is_blocked(x, y)) continue;
      out.cell_index[static_cast<std::size_t>(y * lattice.p + x)] = static_cast<int>(out.free_cells.size());
      out.free_cells.push_back({x, y});
    }
  }
  if (out.free_cells.empty()) throw Error(ErrorKind::kDisconnectedFreeRegion, "no free cells");

  // Free region connectivity on the quotient torus.
  {
    std::vector<char> seen(out.free_cells.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const Cell c = out.free_cells[static_cast<std::size_t>(stack.back())];
      stack.pop_back();
      const Cell steps[] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
      for (const Cell& n : steps) {
        if (table.is_blocked(n.x, n.y)) continue;
        const Cell k = lattice.reduce(n.x, n.y);
        const int idx = out.cell_index[static_cast<std::size_t>(k.y * lattice.p + k.x)];
        if (!seen[static_cast<std::size_t>(idx)]) {
          seen[static_cast<std::size_t>(idx)] = 1;
          ++count;
          stack.push_back(idx);
        }
      }
    }
    if (count != out.free_cells.size()) {
      throw Error(ErrorKind::kDisconnectedFreeRegion, "free region of the table is not connected");
    }
  }

  const int n = 4 * static_cast<int>(out.free_cells.size());
  std::vector<int> r(static_cast<std::size_t>(n));
  std::vector<int> u(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < out.free_cells.size(); ++k) {
    const Cell c = out.free_cells[k];
    const int ki = static_cast<int>(k);
    for (int ex = 0; ex < 2; ++ex) {
      for (int ey = 0; ey < 2; ++ey) {
        const int sq = Unfolding::square(ki, ex, ey);
        // Sheet ex = 1 is mirrored: moving right on the surface moves left in the table.
        const int dx = ex ? -1 : 1;
        const int dy = ey ? -1 : 1;
        const int right = out.square_at(c.x + dx, c.y, ex, ey);
        const int up = out.square_at(c.x, c.y + dy, ex, ey);
        r[static_cast<std::size_t>(sq)] = right >= 0 ? right : Unfolding::square(ki, 1 - ex, ey);
        u[static_cast<std::size_t>(sq)] = up >= 0 ? up : Unfolding::square(ki, ex, 1 - ey);
      }
    }
  }
  out.surface = Origami(Permutation(std::move(r)), Permutation(std::move(u)));
  if (!is_connected(out.surface)) {
    throw Error(ErrorKind::kDisconnectedSurface,
                "unfolded surface is disconnected (reflections never mix the four sheets)");
  }
  return out;
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    const auto b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos || raw[b] == '#') continue;
    const auto e = raw.find_last_not_of(" \t\r");
    lines.push_back(raw.substr(b, e - b + 1));
  }
  return lines;
}

template <typename T>
std::pair<T, T> read_pair(const std::string& line) {
  std::istringstream in(line);
  T a{};
  T b{};
  std::string rest;
  if (!(in >> a >> b) || (in >> rest)) throw Error(ErrorKind::kParse, "expected two numbers, got '" + line + "'");
  return {a, b};
}

double polygon_signed_area(const std::vector<Point>& v) {
  double a = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a / 2;
}

}  // namespace

CellTable::CellTable(int width, int height, std::vector<Cell> blocked)
    : width_(width), height_(height), blocked_(std::move(blocked)) {
  if (width_ < 1 || height_ < 1) throw Error(ErrorKind::kDomainViolation, "table dimensions must be positive");
  std::sort(blocked_.begin(), blocked_.end());
  blocked_.erase(std::unique(blocked_.begin(), blocked_.end()), blocked_.end());
  grid_.assign(static_cast<std::size_t>(width_ * height_), 0);
  for (const Cell& c : blocked_) {
    if (c.x < 0 || c.x >= width_ || c.y < 0 || c.y >= height_) {
      throw Error(ErrorKind::kDomainViolation,
                  "blocked cell (" + std::to_string(c.x) + "," + std::to_string(c.y) + ") outside the domain");
    }
    grid_[static_cast<std::size_t>(c.y * width_ + c.x)] = 1;
  }
}

bool CellTable::is_blocked(int x, int y) const {
  return grid_[static_cast<std::size_t>(floor_mod(y, height_) * width_ + floor_mod(x, width_))] != 0;
}

WindTreeTable parse_table(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::kParse, "empty table description");
  if (lines.front() == "POLY") {
    if (lines.size() < 2) throw Error(ErrorKind::kParse, "POLY table needs dimensions");
    PolygonTable t;
    std::tie(t.width, t.height) = read_pair<double>(lines[1]);
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const auto [x, y] = read_pair<double>(lines[i]);
      t.vertices.push_back({x, y});
    }
    if (t.vertices.size() < 4) throw Error(ErrorKind::kParse, "obstacle polygon needs at least 4 vertices");
    return t;
  }
  const auto [w, h] = read_pair<int>(lines.front());
  std::vector<Cell> blocked;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [x, y] = read_pair<int>(lines[i]);
    blocked.push_back({x, y});
  }
  return CellTable(w, h, std::move(blocked));
}

std::string to_text(const CellTable& table) {
  std::string out = std::to_string(table.width()) + " " + std::to_string(table.height()) + "\n";
  for (const Cell& c : table.blocked()) out += std::to_string(c.x) + " " + std::to_string(c.y) + "\n";
  return out;
}

std::string to_text(const PolygonTable& table) {
  std::ostringstream out;
  out.precision(17);
  out << "POLY\n" << table.width << " " << table.height << "\n";
  for (const Point& p : table.vertices) out << p.x << " " << p.y << "\n";
  return out.str();
}

CellTable rasterize(const PolygonTable& table) {
  const auto is_int = [](double v) { return std::floor(v) == v; };
  if (!is_int(table.width) || !is_int(table.height)) {
    throw Error(ErrorKind::kDomainViolation, "rasterization needs integer table dimensions");
  }
  std::vector<std::pair<long, long>> v2;  // doubled vertex coordinates
  for (const Point& p : table.vertices) {
    if (!is_int(p.x) || !is_int(p.y)) throw Error(ErrorKind::kDomainViolation, "rasterization needs integer vertices");
    v2.emplace_back(2 * static_cast<long>(p.x), 2 * static_cast<long>(p.y));
  }
  const int w = static_cast<int>(table.width);
  const int h = static_cast<int>(table.height);
  std::vector<Cell> blocked;
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      const long cx = 2L * x + 1;
      const long cy = 2L * y + 1;
      bool inside = false;
      // Cell centers have odd doubled coordinates and never lie on an edge.
      for (std::size_t i = 0, j = v2.size() - 1; i < v2.size(); j = i++) {
        const auto [xi, yi] = v2[i];
        const auto [xj, yj] = v2[j];
        if ((yi > cy) != (yj > cy)) {
          // x coordinate of the crossing compared exactly: xi + (cy - yi)(xj - xi)/(yj - yi) > cx
          const long num = (cy - yi) * (xj - xi);
          const long den = yj - yi;
          const bool right = den > 0 ? (xi - cx) * den + num > 0 : (xi - cx) * den + num < 0;
          if (right) inside = !inside;
        }
      }
      if (inside) blocked.push_back({x, y});
    }
  }
  return CellTable(w, h, std::move(blocked));
}

FamilyIndex family_index(const CellTable& table) {
  const auto components = obstacle_components(table);
  if (components.empty()) throw Error(ErrorKind::kDomainViolation, "table has no obstacle");
  if (components.size() > 1) {
    throw Error(ErrorKind::kMultipleObstacles,
                "table has " + std::to_string(components.size()) + " obstacles per period");
  }
  const std::set<Cell> cells(components.front().begin(), components.front().end());
  int minx = cells.begin()->x, maxx = minx, miny = cells.begin()->y, maxy = miny;
  for (const Cell& c : cells) {
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
    miny = std::min(miny, c.y);
    maxy = std::max(maxy, c.y);
  }
  for (const Cell& c : cells) {
    if (!cells.contains({minx + maxx - c.x, c.y}) || !cells.contains({c.x, miny + maxy - c.y})) {
      throw Error(ErrorKind::kAsymmetricObstacle, "obstacle is not symmetric under both axis reflections");
    }
  }
  FamilyIndex out;
  for (int vx = minx; vx <= maxx + 1; ++vx) {
    for (int vy = miny; vy <= maxy + 1; ++vy) {
      const int k = static_cast<int>(cells.contains({vx - 1, vy - 1})) + static_cast<int>(cells.contains({vx, vy - 1})) +
                    static_cast<int>(cells.contains({vx - 1, vy})) + static_cast<int>(cells.contains({vx, vy}));
      if (k == 1) ++out.convex_corners;
      if (k == 3) ++out.reflex_corners;
    }
  }
  if (out.convex_corners % 4 != 0 || out.reflex_corners != out.convex_corners - 4) {
    throw Error(ErrorKind::kCornerCountMismatch, std::to_string(out.convex_corners) + " convex and " +
                                                     std::to_string(out.reflex_corners) + " reflex corners");
  }
  out.m = out.convex_corners / 4;
  return out;
}

FamilyIndex family_index(const PolygonTable& table) {
  const auto& v = table.vertices;
  if (v.size() < 4) throw Error(ErrorKind::kDomainViolation, "obstacle polygon needs at least 4 vertices");
  double minx = v[0].x, maxx = v[0].x, miny = v[0].y, maxy = v[0].y;
  for (const Point& p : v) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  if (minx <= 0 || miny <= 0 || maxx >= table.width || maxy >= table.height) {
    throw Error(ErrorKind::kObstacleTouchesBoundary, "obstacle polygon must lie strictly inside the domain");
  }
  const double tol = 1e-9 * std::max(table.width, table.height);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    const bool vertical = std::abs(p.x - q.x) <= tol;
    const bool horizontal = std::abs(p.y - q.y) <= tol;
    if (vertical == horizontal) throw Error(ErrorKind::kDomainViolation, "obstacle edges must be axis-parallel");
  }
  const auto has_vertex = [&](double x, double y) {
    return std::any_of(v.begin(), v.end(),
                       [&](const Point& p) { return std::abs(p.x - x) <= tol && std::abs(p.y - y) <= tol; });
  };
  for (const Point& p : v) {
    if (!has_vertex(minx + maxx - p.x, p.y) || !has_vertex(p.x, miny + maxy - p.y)) {
      throw Error(ErrorKind::kAsymmetricObstacle, "obstacle is not symmetric under both axis reflections");
    }
  }
  const double orientation = polygon_signed_area(v) > 0 ? 1.0 : -1.0;
  FamilyIndex out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[(i + v.size() - 1) % v.size()];
    const Point& b = v[i];
    const Point& c = v[(i + 1) % v.size()];
    const double turn = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
    if (turn * orientation > 0) {
      ++out.convex_corners;
    } else {
      ++out.reflex_corners;
    }
  }
  if (out.convex_corners % 4 != 0 || out.reflex_corners != out.convex_corners - 4) {
    throw Error(ErrorKind::kCornerCountMismatch, std::to_string(out.convex_corners) + " convex and " +
                                                     std::to_string(out.reflex_corners) + " reflex corners");
  }
  out.m = out.convex_corners / 4;
  return out;
}

int family_dimension(int m) {
  if (m < 1) throw Error(ErrorKind::kDomainViolation, "family index must be positive");
  return 2 * m + 2;
}

int stratum_dimension(const SingularityProfile& quadratic) {
  return 2 * genus(quadratic, ProfileKind::kQuadratic) + quadratic.size() - 2;
}

Cell PeriodLattice::reduce(int x, int y) const {
  const int k = floor_div(y, s);
  return {floor_mod(x - k * q, p), y - k * s};
}

int PeriodLattice::vertical_period() const { return s * (p / std::gcd(p, q)); }

int Unfolding::square_at(int x, int y, int ex, int ey) const {
  if (table.is_blocked(x, y)) return -1;
  const Cell c = lattice.reduce(x, y);
  const int k = cell_index[static_cast<std::size_t>(c.y * lattice.p + c.x)];
  return k < 0 ? -1 : square(k, ex, ey);
}

Unfolding unfold_to_origami(const CellTable& table) {
  return unfold(table, PeriodLattice{table.width(), 0, table.height()});
}

Unfolding unfold_diagonal_sublattice(const CellTable& table) {
  if (table.width() % 2 != 0 || table.height() % 2 != 0) {
    throw Error(ErrorKind::kPatternNotSublatticeInvariant, "diagonal sublattice needs even table dimensions");
  }
  return unfold(table, PeriodLattice{table.width(), table.width() / 2, table.height() / 2});
}

WindTreeSymmetries windtree_symmetries(const Unfolding& unfolding) {
  const Origami& o = unfolding.surface;
  const int n = o.size();
  const PeriodLattice& lattice = unfolding.lattice;

  // Square map induced by the cell map f and the sheet flips.
  const auto build = [&](auto cell_map, int flip_x, int flip_y) -> std::vector<int> {
    std::vector<int> images(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < unfolding.free_cells.size(); ++k) {
      const Cell target = cell_map(unfolding.free_cells[k]);
      for (int ex = 0; ex < 2; ++ex) {
        for (int ey = 0; ey < 2; ++ey) {
          const int img = unfolding.square_at(target.x, target.y, ex ^ flip_x, ey ^ flip_y);
          if (img < 0) return {};
          images[static_cast<std::size_t>(Unfolding::square(static_cast<int>(k), ex, ey))] = img;
        }
      }
    }
    std::vector<int> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
    return images;
  };

  std::optional<Permutation> tau_h;
  for (int a = 0; a < lattice.p && !tau_h; ++a) {
    auto images = build([&](Cell c) { return Cell{a - c.x, c.y}; }, 1, 0);
    if (images.empty()) continue;
    Permutation sigma(std::move(images));
    if (is_translation_automorphism(o, sigma)) tau_h = std::move(sigma);
  }
  std::optional<Permutation> tau_v;
  for (int b = 0; b < lattice.vertical_period() && !tau_v; ++b) {
    auto images = build([&](Cell c) { return Cell{c.x, b - c.y}; }, 0, 1);
    if (images.empty()) continue;
    Permutation sigma(std::move(images));
    if (is_translation_automorphism(o, sigma)) tau_v = std::move(sigma);
  }
  if (!tau_h || !tau_v) {
    throw Error(ErrorKind::kSymmetryNotFound,
                std::string("missing ") + (!tau_h ? "tau_h " : "") + (!tau_v ? "tau_v" : ""));
  }
  std::optional<Permutation> iota;
  for (int a = 0; a < lattice.p && !iota; ++a) {
    for (int b = 0; b < lattice.vertical_period() && !iota; ++b) {
      auto images = build([&](Cell c) { return Cell{a - c.x, b - c.y}; }, 0, 0);
      if (images.empty()) continue;
      Permutation sigma(std::move(images));
      if (is_antiautomorphism(o, sigma)) iota = std::move(sigma);
    }
  }
  if (!iota) throw Error(ErrorKind::kSymmetryNotFound, "missing iota");

  const Permutation& th = *tau_h;
  const Permutation& tv = *tau_v;
  const Permutation& io = *iota;
  const bool involutions = th.is_involution() && tv.is_involution() && io.is_involution();
  const bool commuting = th * tv == tv * th && th * io == io * th && tv * io == io * tv;
  // (square permutation, reverses orientation)
  std::set<std::pair<Permutation, bool>> group;
  for (int mask = 0; mask < 8; ++mask) {
    Permutation g = Permutation::identity(n);
    if (mask & 1) g = th * g;
    if (mask & 2) g = tv * g;
    if (mask & 4) g = io * g;
    group.insert({std::move(g), (mask & 4) != 0});
  }
  if (!involutions || !commuting || group.size() != 8) {
    throw Error(ErrorKind::kSymmetryNotFound, "tau_h, tau_v, iota do not generate (Z/2Z)^3");
  }
  return {th, tv, io, static_cast<int>(group.size())};
}

CellTable make_classical_table() { return CellTable(2, 2, {{1, 1}}); }

CellTable make_chessboard_table() { return CellTable(4, 4, {{1, 1}, {3, 1}, {1, 3}}); }

CellTable make_diagonal_table() { return CellTable(4, 4, {{1, 1}, {3, 3}}); }

CellTable make_cross_table(int width, int height, const std::vector<int>& widths, const std::vector<int>& heights) {
  if (widths.size() != heights.size() || widths.empty()) {
    throw Error(ErrorKind::kDomainViolation, "cross needs matching, non-empty width and height lists");
  }
  std::set<Cell> cells;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if ((width - widths[i]) % 2 != 0 || (height - heights[i]) % 2 != 0 || widths[i] < 1 || heights[i] < 1 ||
        widths[i] > width || heights[i] > height) {
      throw Error(ErrorKind::kDomainViolation, "rectangle cannot be centered in the domain");
    }
    const int x0 = (width - widths[i]) / 2;
    const int y0 = (height - heights[i]) / 2;
    for (int x = x0; x < x0 + widths[i]; ++x)
      for (int y = y0; y < y0 + heights[i]; ++y) cells.insert({x, y});
  }
  return CellTable(width, height, {cells.begin(), cells.end()});
}

PolygonTable make_stepped_cross(double width, double height, const std::vector<double>& half_widths,
                                const std::vector<double>& half_heights) {
  if (half_widths.size() != half_heights.size() || half_widths.empty()) {
    throw Error(ErrorKind::kDomainViolation, "cross needs matching, non-empty half-width and half-height lists");
  }
  for (std::size_t i = 1; i < half_widths.size(); ++i) {
    if (!(half_widths[i] < half_widths[i - 1]) || !(half_heights[i] > half_heights[i - 1])) {
      throw Error(ErrorKind::kDomainViolation, "stepped cross needs decreasing widths and increasing heights");
    }
  }
  const double cx = width / 2;
  const double cy = height / 2;
  std::vector<Point> quadrant;  // upper-right staircase, from the right side to the top
  for (std::size_t i = 0; i < half_widths.size(); ++i) {
    if (i > 0) quadrant.push_back({half_widths[i], half_heights[i - 1]});
    quadrant.push_back({half_widths[i], half_heights[i]});
  }
  PolygonTable t{width, height, {}};
  for (const Point& p : quadrant) t.vertices.push_back({cx + p.x, cy + p.y});
  for (auto it = quadrant.rbegin(); it != quadrant.rend(); ++it) t.vertices.push_back({cx - it->x, cy + it->y});
  for (const Point& p : quadrant) t.vertices.push_back({cx - p.x, cy - p.y});
  for (auto it = quadrant.rbegin(); it != quadrant.rend(); ++it) t.vertices.push_back({cx + it->x, cy - it->y});
  return t;
}

}  // namespace windtree
