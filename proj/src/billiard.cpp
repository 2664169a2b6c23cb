#include "windtree/billiard.hpp"

#include <cinttypes>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

#include "windtree/combinatorics.hpp"
#include "windtree/parallel.hpp"

namespace windtree {

Rational ScalarTraits<Rational>::floor(const Rational& v) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v.raw().get_num_mpz_t(), v.raw().get_den_mpz_t());
  return Rational(q);
}

namespace {

struct UnitEdge {
  int c;
  int normal;
  int lo;
};

// Blocked-cell count around grid vertex (vx, vy); 1 or 3 marks an obstacle corner.
int vertex_count(const CellTable& t, int vx, int vy) {
  return static_cast<int>(t.is_blocked(vx - 1, vy - 1)) + static_cast<int>(t.is_blocked(vx, vy - 1)) +
         static_cast<int>(t.is_blocked(vx - 1, vy)) + static_cast<int>(t.is_blocked(vx, vy));
}

// Merges unit edges on the same line and side; coordinate `extent` walls are mirrored to 0 and back.
template <typename Scalar>
std::vector<Wall<Scalar>> merge_edges(std::vector<UnitEdge> edges, int extent, auto is_corner) {
  std::vector<UnitEdge> all;
  for (const UnitEdge& e : edges) {
    all.push_back(e);
    if (e.c == extent) all.push_back({0, e.normal, e.lo});
    if (e.c == 0) all.push_back({extent, e.normal, e.lo});
  }
  std::sort(all.begin(), all.end(), [](const UnitEdge& a, const UnitEdge& b) {
    return std::tie(a.c, a.normal, a.lo) < std::tie(b.c, b.normal, b.lo);
  });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const UnitEdge& a, const UnitEdge& b) {
                          return a.c == b.c && a.normal == b.normal && a.lo == b.lo;
                        }),
            all.end());
  std::vector<Wall<Scalar>> walls;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i + 1;
    while (j < all.size() && all[j].c == all[i].c && all[j].normal == all[i].normal &&
           all[j].lo == all[j - 1].lo + 1) {
      ++j;
    }
    const int lo = all[i].lo;
    const int hi = all[j - 1].lo + 1;
    walls.push_back(
        {Scalar(all[i].c), Scalar(lo), Scalar(hi), all[i].normal, is_corner(all[i].c, lo), is_corner(all[i].c, hi)});
    i = j;
  }
  return walls;
}

template <typename Scalar>
bool by_coordinate(const Wall<Scalar>& a, const Wall<Scalar>& b) {
  return a.c < b.c;
}

bool point_in_polygon(const std::vector<Point>& v, double x, double y) {
  bool inside = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    if ((v[i].y > y) != (v[j].y > y)) {
      const double cross = v[i].x + (y - v[i].y) * (v[j].x - v[i].x) / (v[j].y - v[i].y);
      if (x < cross) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

template <typename Scalar>
Billiard<Scalar>::Billiard(const CellTable& table, bool grid_events)
    : width_(table.width()), height_(table.height()), grid_events_(grid_events), cells_(table) {
  if constexpr (!Traits::exact) tolerance_ = 1e-9 * std::min(table.width(), table.height());
  std::vector<UnitEdge> vertical;
  std::vector<UnitEdge> horizontal;
  for (const Cell& c : table.blocked()) {
    if (!table.is_blocked(c.x + 1, c.y)) vertical.push_back({c.x + 1, 1, c.y});
    if (!table.is_blocked(c.x - 1, c.y)) vertical.push_back({c.x, -1, c.y});
    if (!table.is_blocked(c.x, c.y + 1)) horizontal.push_back({c.y + 1, 1, c.x});
    if (!table.is_blocked(c.x, c.y - 1)) horizontal.push_back({c.y, -1, c.x});
  }
  const auto corner = [&table](int vx, int vy) {
    const int k = vertex_count(table, vx, vy);
    return k == 1 || k == 3;
  };
  vertical_ = merge_edges<Scalar>(vertical, table.width(), [&](int c, int v) { return corner(c, v); });
  horizontal_ = merge_edges<Scalar>(horizontal, table.height(), [&](int c, int v) { return corner(v, c); });
}

template <typename Scalar>
Billiard<Scalar>::Billiard(const PolygonTable& table)
  requires std::is_same_v<Scalar, double>
    : width_(table.width), height_(table.height), polygon_(table) {
  tolerance_ = 1e-9 * std::min(table.width, table.height);
  const auto& v = table.vertices;
  if (v.size() < 4) throw Error(ErrorKind::kDomainViolation, "obstacle polygon needs at least 4 vertices");
  double area = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    area += p.x * q.y - q.x * p.y;
    if (p.x <= 0 || p.y <= 0 || p.x >= table.width || p.y >= table.height) {
      throw Error(ErrorKind::kObstacleTouchesBoundary, "obstacle polygon must lie strictly inside the domain");
    }
  }
  const int orientation = area > 0 ? 1 : -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    if (p.x == q.x && p.y != q.y) {
      vertical_.push_back({p.x, std::min(p.y, q.y), std::max(p.y, q.y), q.y > p.y ? orientation : -orientation});
    } else if (p.y == q.y && p.x != q.x) {
      horizontal_.push_back({p.y, std::min(p.x, q.x), std::max(p.x, q.x), q.x > p.x ? -orientation : orientation});
    } else {
      throw Error(ErrorKind::kDomainViolation, "obstacle edges must be axis-parallel");
    }
  }
  std::sort(vertical_.begin(), vertical_.end(), by_coordinate<double>);
  std::sort(horizontal_.begin(), horizontal_.end(), by_coordinate<double>);
}

template <typename Scalar>
bool Billiard<Scalar>::is_free(const Scalar& x, const Scalar& y) const {
  if (x < Scalar(0) || y < Scalar(0) || x > width_ || y > height_) return false;
  if (cells_) {
    const Scalar fx = Traits::floor(x);
    const Scalar fy = Traits::floor(y);
    // Points on grid lines are free only when every adjacent cell is.
    for (int ix = 0; ix < 2; ++ix) {
      for (int iy = 0; iy < 2; ++iy) {
        if ((ix == 1 && fx != x) || (iy == 1 && fy != y)) continue;
        const int cx = static_cast<int>(Traits::to_double(fx)) - ix;
        const int cy = static_cast<int>(Traits::to_double(fy)) - iy;
        if (cells_->is_blocked(cx, cy)) return false;
      }
    }
    return true;
  }
  if constexpr (std::is_same_v<Scalar, double>) {
    return !point_in_polygon(polygon_->vertices, x, y);
  }
  return true;
}

template <typename Scalar>
TrajectoryState<Scalar> Billiard<Scalar>::start(const Scalar& x, const Scalar& y, const Scalar& dx,
                                                const Scalar& dy) const {
  if (!is_free(x, y)) throw Error(ErrorKind::kDomainViolation, "start point is not in the free region");
  if (dx == Scalar(0) && dy == Scalar(0)) throw Error(ErrorKind::kDomainViolation, "zero direction");
  TrajectoryState<Scalar> s;
  s.x = x;
  s.y = y;
  s.dx = dx;
  s.dy = dy;
  return s;
}

template <typename Scalar>
typename Billiard<Scalar>::Hit Billiard<Scalar>::next_hit(const std::vector<Wall<Scalar>>& walls,
                                                          const Scalar& extent, const Scalar& pos, const Scalar& vel,
                                                          const Scalar& other, const Scalar& other_vel) const {
  Hit hit;
  const Scalar zero(0);
  if (vel == zero) return hit;
  const bool forward = vel > zero;
  Scalar target = forward ? extent : zero;
  HitKind kind = HitKind::kBoundary;
  if (grid_events_) {
    const Scalar f = Traits::floor(pos);
    const Scalar g = forward ? f + Scalar(1) : (f == pos ? f - Scalar(1) : f);
    if (forward ? g < target : g > target) {
      target = g;
      kind = HitKind::kGrid;
    }
  }

  const auto check = [&](const Wall<Scalar>& w) -> bool {
    const Scalar dt = (w.c - pos) / vel;
    const Scalar o = other + other_vel * dt;
    if (o < w.lo - tolerance_ || o > w.hi + tolerance_) return false;
    if ((w.lo_corner && Traits::abs(o - w.lo) <= tolerance_) || (w.hi_corner && Traits::abs(o - w.hi) <= tolerance_)) {
      throw Error(ErrorKind::kCornerHit, "trajectory meets an obstacle corner");
    }
    hit = {HitKind::kWall, w.c, dt};
    return true;
  };

  if (forward) {
    auto it = std::upper_bound(walls.begin(), walls.end(), pos,
                               [](const Scalar& p, const Wall<Scalar>& w) { return p < w.c; });
    for (; it != walls.end() && it->c <= target; ++it) {
      if (it->normal < 0 && check(*it)) return hit;
    }
  } else {
    auto it = std::lower_bound(walls.begin(), walls.end(), pos,
                               [](const Wall<Scalar>& w, const Scalar& p) { return w.c < p; });
    while (it != walls.begin()) {
      --it;
      if (it->c < target) break;
      if (it->normal > 0 && check(*it)) return hit;
    }
  }
  hit = {kind, target, (target - pos) / vel};
  return hit;
}

template <typename Scalar>
BilliardEvent Billiard<Scalar>::step(TrajectoryState<Scalar>& s, const std::optional<Scalar>& until) const {
  const Hit hv = next_hit(vertical_, width_, s.x, s.dx, s.y, s.dy);
  const Hit hh = next_hit(horizontal_, height_, s.y, s.dy, s.x, s.dx);
  if (hv.kind == HitKind::kNone && hh.kind == HitKind::kNone) {
    throw Error(ErrorKind::kDomainViolation, "zero direction");
  }
  Scalar dt;
  if (hv.kind == HitKind::kNone) {
    dt = hh.dt;
  } else if (hh.kind == HitKind::kNone) {
    dt = hv.dt;
  } else {
    dt = hh.dt < hv.dt ? hh.dt : hv.dt;
  }

  BilliardEvent event;
  if (until && *until < s.time + dt) {
    const Scalar part = *until - s.time;
    s.x += s.dx * part;
    s.y += s.dy * part;
    if constexpr (!Traits::exact) {
      s.x = std::clamp(s.x, 0.0, width_);
      s.y = std::clamp(s.y, 0.0, height_);
    }
    s.time = *until;
    event.limit = true;
    return event;
  }

  const bool v = hv.kind != HitKind::kNone && hv.dt == dt;
  const bool h = hh.kind != HitKind::kNone && hh.dt == dt;
  if (v && h && hv.kind == HitKind::kWall && hh.kind == HitKind::kWall) {
    throw Error(ErrorKind::kCornerHit, "trajectory meets an obstacle corner");
  }
  s.x = v ? hv.coord : s.x + s.dx * dt;
  s.y = h ? hh.coord : s.y + s.dy * dt;
  if constexpr (!Traits::exact) {
    s.x = std::clamp(s.x, 0.0, width_);
    s.y = std::clamp(s.y, 0.0, height_);
  }
  s.time += dt;
  ++s.events;

  if (v) {
    event.vertical = true;
    if (hv.kind == HitKind::kWall) {
      s.dx = -s.dx;
      s.ex ^= 1;
      event.reflected_x = true;
    } else if (hv.kind == HitKind::kBoundary) {
      if (s.dx > Scalar(0)) {
        s.x = Scalar(0);
        ++s.ox;
      } else {
        s.x = width_;
        --s.ox;
      }
    }
  }
  if (h) {
    event.horizontal = true;
    if (hh.kind == HitKind::kWall) {
      s.dy = -s.dy;
      s.ey ^= 1;
      event.reflected_y = true;
    } else if (hh.kind == HitKind::kBoundary) {
      if (s.dy > Scalar(0)) {
        s.y = Scalar(0);
        ++s.oy;
      } else {
        s.y = height_;
        --s.oy;
      }
    }
  }
  return event;
}

template <typename Scalar>
void Billiard<Scalar>::advance(TrajectoryState<Scalar>& s, const Scalar& duration) const {
  const Scalar until = s.time + duration;
  while (!step(s, until).limit) {
  }
}

template class Billiard<double>;
template class Billiard<Rational>;

std::vector<double> geometric_schedule(double t_min, double t_max, int samples) {
  if (samples < 12) throw Error(ErrorKind::kDomainViolation, "schedule needs at least 12 points");
  if (!(t_min > 0) || !(t_max > t_min)) throw Error(ErrorKind::kDomainViolation, "schedule needs 0 < t_min < t_max");
  std::vector<double> times(static_cast<std::size_t>(samples));
  const double ratio = std::log(t_max / t_min) / (samples - 1);
  for (int i = 0; i < samples; ++i) times[static_cast<std::size_t>(i)] = t_min * std::exp(ratio * i);
  times.back() = t_max;
  return times;
}

std::pair<double, double> log_log_slope(const std::vector<double>& x, const std::vector<double>& y, std::size_t from) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = from; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] > 0 && y[i] > 0) pts.emplace_back(std::log(x[i]), std::log(y[i]));
  }
  if (pts.size() < 2) return {std::numeric_limits<double>::quiet_NaN(), 0};
  double mx = 0;
  double my = 0;
  for (const auto& [a, b] : pts) {
    mx += a;
    my += b;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxx = 0;
  double sxy = 0;
  for (const auto& [a, b] : pts) {
    sxx += (a - mx) * (a - mx);
    sxy += (a - mx) * (b - my);
  }
  const double slope = sxy / sxx;
  double rss = 0;
  for (const auto& [a, b] : pts) {
    const double r = b - (my + slope * (a - mx));
    rss += r * r;
  }
  return {std::clamp(slope, 0.0, 1.0), std::sqrt(rss / static_cast<double>(pts.size()))};
}

DiffusionEstimate estimate_diffusion(const Billiard<double>& billiard, double x0, double y0, double angle,
                                     const DiffusionOptions& options) {
  DiffusionEstimate out;
  const auto schedule = geometric_schedule(options.t_min, options.t_max, options.samples);
  auto s = billiard.start(x0, y0, std::cos(angle), std::sin(angle));
  const double w = billiard.width();
  const double h = billiard.height();
  double max_d2 = 0;
  const auto track = [&] {
    const double px = static_cast<double>(s.ox) * w + s.x - x0;
    const double py = static_cast<double>(s.oy) * h + s.y - y0;
    max_d2 = std::max(max_d2, px * px + py * py);
  };
  try {
    for (const double t : schedule) {
      while (!billiard.step(s, t).limit) {
        track();
        if (s.events >= options.max_events) break;
      }
      track();
      out.times.push_back(s.time);
      out.max_displacement.push_back(std::sqrt(max_d2));
      if (s.events >= options.max_events) break;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kCornerHit) throw;
    out.corner_hit = true;
  }
  out.events = s.events;
  const std::size_t n = out.times.size();
  if (n >= 3) {
    out.window_start = static_cast<int>(std::min<std::size_t>(
        n - 2, static_cast<std::size_t>(std::floor(static_cast<double>(n) * (1.0 - options.window)))));
    std::tie(out.delta_hat, out.residual) =
        log_log_slope(out.times, out.max_displacement, static_cast<std::size_t>(out.window_start));
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PolygonTable make_generic_table(int m) {
  if (m < 1) throw Error(ErrorKind::kDomainViolation, "family index must be positive");
  std::vector<double> a;
  std::vector<double> b;
  if (m == 1) {
    a = {0.5 / std::numbers::sqrt2};
    b = {0.5 / std::numbers::sqrt3};
  } else {
    for (int i = 0; i < m; ++i) {
      const double t = static_cast<double>(i) / (m - 1);
      a.push_back(0.07 + 0.33 * (1 - t) + 0.01 * std::fmod(i * std::numbers::sqrt2, 1.0));
      b.push_back(0.07 + 0.33 * t + 0.01 * std::fmod(i * std::numbers::sqrt3, 1.0));
    }
  }
  return make_stepped_cross(1.0, 1.0, a, b);
}

SampleStart sample_start(const Billiard<double>& billiard, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(0.0, billiard.width());
  std::uniform_real_distribution<double> uy(0.0, billiard.height());
  std::uniform_real_distribution<double> ua(0.0, 2 * std::numbers::pi);
  SampleStart s;
  do {
    s.x = ux(rng);
    s.y = uy(rng);
  } while (!billiard.is_free(s.x, s.y));
  s.angle = ua(rng);
  return s;
}

std::vector<SampleRow> run_samples(const Billiard<double>& billiard, int m, int samples, std::uint64_t seed,
                                   const DiffusionOptions& options, int jobs) {
  std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * static_cast<std::uint64_t>(m));
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(samples));
  for (auto& s : seeds) s = splitmix64(state);
  std::vector<SampleRow> rows(seeds.size());
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    const SampleStart start = sample_start(billiard, seeds[i]);
    const DiffusionEstimate est = estimate_diffusion(billiard, start.x, start.y, start.angle, options);
    rows[i] = {m,
               seeds[i],
               start.angle,
               est.times.empty() ? 0.0 : est.times.back(),
               est.max_displacement.empty() ? 0.0 : est.max_displacement.back(),
               est.delta_hat,
               est.corner_hit};
  });
  return rows;
}

CampaignSpec parse_campaign_config(std::string_view text) {
  CampaignSpec spec;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    const auto trim = [](std::string v) {
      const auto b = v.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      return v.substr(b, v.find_last_not_of(" \t\r") - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "family") {
        spec.family.clear();
        std::istringstream items(value);
        std::string item;
        while (std::getline(items, item, ',')) spec.family.push_back(std::stoi(trim(item)));
      } else if (key == "samples") {
        spec.samples = std::stoi(value);
      } else if (key == "t_max") {
        spec.t_max = std::stod(value);
      } else if (key == "schedule_points") {
        spec.schedule_points = std::stoi(value);
      } else if (key == "window") {
        spec.window = std::stod(value);
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
      } else if (key == "jobs") {
        spec.jobs = std::stoi(value);
      } else {
        throw Error(ErrorKind::kParse, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(lineno) + ": bad value '" + value + "'");
    }
  }
  return spec;
}

CampaignResult campaign(const CampaignSpec& spec) {
  if (spec.family.empty() || spec.samples < 1) throw Error(ErrorKind::kDomainViolation, "empty campaign");
  DiffusionOptions options;
  options.t_max = spec.t_max;
  options.samples = spec.schedule_points;
  options.window = spec.window;
  CampaignResult result;
  for (const int m : spec.family) {
    const Billiard<double> billiard(make_generic_table(m));
    const auto rows = run_samples(billiard, m, spec.samples, spec.seed, options, spec.jobs);
    CampaignSummary summary;
    summary.m = m;
    summary.closed_form = delta_closed_form(m);
    std::vector<double> values;
    for (const auto& row : rows) {
      if (row.corner_hit || std::isnan(row.delta_hat)) {
        ++summary.flagged;
      } else {
        values.push_back(row.delta_hat);
      }
    }
    summary.runs = static_cast<int>(values.size());
    if (!values.empty()) {
      double sum = 0;
      for (double v : values) sum += v;
      summary.mean_delta_hat = sum / static_cast<double>(values.size());
      double var = 0;
      for (double v : values) var += (v - summary.mean_delta_hat) * (v - summary.mean_delta_hat);
      summary.spread = values.size() > 1 ? std::sqrt(var / static_cast<double>(values.size() - 1)) : 0.0;
    }
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    result.summary.push_back(summary);
  }
  result.monotone = true;
  for (std::size_t i = 1; i < result.summary.size(); ++i) {
    if (!(result.summary[i].mean_delta_hat < result.summary[i - 1].mean_delta_hat)) result.monotone = false;
  }
  return result;
}

std::string to_csv(const std::vector<SampleRow>& rows) {
  std::string out = "m,seed,direction,t,max_disp,delta_hat\n";
  char line[256];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%d,%" PRIu64 ",%.17g,%.17g,%.17g,%.17g\n", r.m, r.seed, r.direction, r.t,
                  r.max_disp, r.delta_hat);
    out += line;
  }
  return out;
}

}  // namespace windtree
