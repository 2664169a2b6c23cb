#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "windtree/error.hpp"
#include "windtree/rational.hpp"
#include "windtree/table.hpp"

namespace windtree {

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double abs(double v) { return std::fabs(v); }
  static double to_double(double v) { return v; }
  static double floor(double v) { return std::floor(v); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational abs(const Rational& v) { return windtree::abs(v); }
  static double to_double(const Rational& v) { return v.to_double(); }
  static Rational floor(const Rational& v);
};

/// Position inside the closed fundamental domain [0, W] x [0, H], lattice offset of
/// that domain copy, direction of motion and the reflection parities.
template <typename Scalar>
struct TrajectoryState {
  Scalar x{};
  Scalar y{};
  long ox = 0;
  long oy = 0;
  Scalar dx{};
  Scalar dy{};
  int ex = 0;
  int ey = 0;
  Scalar time{};
  std::uint64_t events = 0;
};

/// What happened at one event. A crossing means the particle moved on to the next
/// cell in that axis (through a grid line, the domain boundary, or by reflection).
struct BilliardEvent {
  bool vertical = false;    // crossed or hit a line x = const
  bool horizontal = false;  // crossed or hit a line y = const
  bool reflected_x = false;
  bool reflected_y = false;
  bool limit = false;  // stopped at the requested time limit
};

/// Axis-parallel wall. Vertical walls sit on x = c and span y in [lo, hi]; the free
/// side is c + normal (normal = +1 or -1).
template <typename Scalar>
struct Wall {
  Scalar c{};
  Scalar lo{};
  Scalar hi{};
  int normal = 1;
  bool lo_corner = true;
  bool hi_corner = true;
};

/// Specular billiard flow in a doubly periodic table, one event at a time.
template <typename Scalar>
class Billiard {
 public:
  using Traits = ScalarTraits<Scalar>;

  /// grid_events stops at every integer grid line as well (integer tables only).
  explicit Billiard(const CellTable& table, bool grid_events = false);
  explicit Billiard(const PolygonTable& table)
    requires std::is_same_v<Scalar, double>;

  const Scalar& width() const { return width_; }
  const Scalar& height() const { return height_; }
  const std::vector<Wall<Scalar>>& vertical_walls() const { return vertical_; }
  const std::vector<Wall<Scalar>>& horizontal_walls() const { return horizontal_; }
  /// 1e-9 of the smallest domain side for doubles, 0 for exact arithmetic.
  const Scalar& tolerance() const { return tolerance_; }

  /// True when (x, y) lies in the open free region of the domain.
  bool is_free(const Scalar& x, const Scalar& y) const;

  TrajectoryState<Scalar> start(const Scalar& x, const Scalar& y, const Scalar& dx, const Scalar& dy) const;

  /// Moves to the next event, or to the absolute time `until`, whichever is first.
  /// Throws CornerHit when the particle meets an obstacle corner.
  BilliardEvent step(TrajectoryState<Scalar>& s, const std::optional<Scalar>& until = std::nullopt) const;

  /// Flows for the given duration.
  void advance(TrajectoryState<Scalar>& s, const Scalar& duration) const;

 private:
  enum class HitKind { kNone, kWall, kBoundary, kGrid };
  struct Hit {
    HitKind kind = HitKind::kNone;
    Scalar coord{};
    Scalar dt{};
  };

  /// Next event on lines pos = const, for position pos moving with velocity vel
  /// while the other coordinate is other + t * other_vel.
  Hit next_hit(const std::vector<Wall<Scalar>>& walls, const Scalar& extent, const Scalar& pos, const Scalar& vel,
               const Scalar& other, const Scalar& other_vel) const;

  Scalar width_{};
  Scalar height_{};
  Scalar tolerance_{};
  bool grid_events_ = false;
  std::vector<Wall<Scalar>> vertical_;    // sorted by c
  std::vector<Wall<Scalar>> horizontal_;  // sorted by c
  std::optional<CellTable> cells_;
  std::optional<PolygonTable> polygon_;
};

struct DiffusionOptions {
  double t_max = 1e6;
  int samples = 40;  // geometric schedule points, at least 12
  double t_min = 10;
  double window = 0.5;  // trailing fraction of the schedule used in the fit
  std::uint64_t max_events = std::numeric_limits<std::uint64_t>::max();
};

struct DiffusionEstimate {
  std::vector<double> times;
  std::vector<double> max_displacement;
  double delta_hat = std::numeric_limits<double>::quiet_NaN();
  double residual = 0;
  int window_start = 0;
  std::uint64_t events = 0;
  bool corner_hit = false;
  /// Max distance from the start stands in for the trajectory diameter.
  static constexpr const char* kEstimatorNote = "diameter proxied by max distance from start";
};

/// Geometric schedule with `samples` points from t_min to t_max.
std::vector<double> geometric_schedule(double t_min, double t_max, int samples);

/// Least-squares slope of log y against log x over points [from, end), clamped to [0, 1].
/// Returns the slope and the root-mean-square residual.
std::pair<double, double> log_log_slope(const std::vector<double>& x, const std::vector<double>& y, std::size_t from);

DiffusionEstimate estimate_diffusion(const Billiard<double>& billiard, double x0, double y0, double angle,
                                     const DiffusionOptions& options);

/// splitmix64 step, used to derive per-sample seeds.
std::uint64_t splitmix64(std::uint64_t& state);

struct SampleRow {
  int m = 0;
  std::uint64_t seed = 0;
  double direction = 0;  // angle in radians
  double t = 0;
  double max_disp = 0;
  double delta_hat = 0;
  bool corner_hit = false;
};

struct CampaignSummary {
  int m = 0;
  int runs = 0;
  int flagged = 0;
  double mean_delta_hat = 0;
  double spread = 0;  // sample standard deviation
  Rational closed_form;
};

struct CampaignSpec {
  std::vector<int> family{1, 3, 5};
  int samples = 32;
  double t_max = 1e6;
  int schedule_points = 40;
  double window = 0.5;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct CampaignResult {
  std::vector<SampleRow> rows;
  std::vector<CampaignSummary> summary;
  bool monotone = false;  // mean delta_hat strictly decreasing along the family
};

/// Stepped-cross table of B(m) with non-commensurable sizes, in a unit-area domain.
PolygonTable make_generic_table(int m);

/// Uniform start point in the free region and uniform direction, fully determined by seed.
struct SampleStart {
  double x = 0;
  double y = 0;
  double angle = 0;
};
SampleStart sample_start(const Billiard<double>& billiard, std::uint64_t seed);

/// Runs `samples` trajectories of the given table, seeds derived from `seed`.
std::vector<SampleRow> run_samples(const Billiard<double>& billiard, int m, int samples, std::uint64_t seed,
                                   const DiffusionOptions& options, int jobs);

/// key=value lines: family=1,3,5 samples=32 t_max=1e6 schedule_points=40 window=0.5 seed=1 jobs=1.
/// '#' starts a comment; unknown keys are rejected.
CampaignSpec parse_campaign_config(std::string_view text);

CampaignResult campaign(const CampaignSpec& spec);

/// CSV with columns m,seed,direction,t,max_disp,delta_hat.
std::string to_csv(const std::vector<SampleRow>& rows);

}  // namespace windtree
