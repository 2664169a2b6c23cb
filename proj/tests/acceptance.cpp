#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include "properties.hpp"
#include "windtree/billiard.hpp"
#include "windtree/combinatorics.hpp"
#include "windtree/identities.hpp"
#include "windtree/reproduce.hpp"
#include "windtree/siegel_veech.hpp"
#include "windtree/table.hpp"
#include "windtree/teichmuller.hpp"

namespace {

using namespace windtree;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream out;
  out.precision(digits);
  out << std::fixed << v;
  return out.str();
}

int jobs() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

Outcome closed_form() {
  const auto start = std::chrono::steady_clock::now();
  long bad = 0;
  for (long m = 1; m <= 50; ++m) {
    const PipelineReport r = lambda_plus_pipeline(m);
    if (r.lambda_plus != delta_closed_form(m) && bad == 0) bad = m;
  }
  const double t = seconds_since(start);
  const bool anchors = lambda_plus_pipeline(1).lambda_plus == Rational(2, 3) &&
                       lambda_plus_pipeline(2).lambda_plus == Rational(8, 15) &&
                       lambda_plus_pipeline(3).lambda_plus == Rational(16, 35);
  return {bad == 0 && anchors && t < 1.0,
          "m=1..50 exact" + (bad ? ", first mismatch m=" + std::to_string(bad) : std::string()) + ", " + fmt(t) + " s"};
}

Outcome identities() {
  const auto start = std::chrono::steady_clock::now();
  const IdentityReport r = verify_identities(200);
  const RecurrenceReport rec = s3_recurrence_check(200);
  const double t = seconds_since(start);
  std::string failed;
  for (const auto& c : r.checks)
    if (!c.passed) failed += " " + c.name + "@" + std::to_string(c.counterexample.value_or(-1));
  if (!rec.factorial_form_passed) failed += " recurrence@" + std::to_string(rec.factorial_form_counterexample.value_or(-1));
  return {failed.empty() && t < 5.0,
          std::to_string(r.checks.size()) + " identities + recurrence, m<=200" +
              (failed.empty() ? "" : ", failed:" + failed) + ", " + fmt(t) + " s"};
}

Outcome pipeline_consistency() {
  long bad = 0;
  for (long m = 1; m <= 200; ++m) {
    const PipelineReport r = lambda_plus_pipeline(m);
    if ((r.pocket_term + r.dumbbell_term != Rational(-1) + delta_closed_form(m) || !r.consistent) && bad == 0) bad = m;
  }
  return {bad == 0, "pocket + dumbbell = -1 + delta(m) for m<=200" +
                        (bad ? ", first mismatch m=" + std::to_string(bad) : std::string())};
}

Outcome strata() {
  std::string detail;
  bool ok = true;
  const auto timed = [&](const std::string& name, const std::function<bool()>& check) {
    const auto start = std::chrono::steady_clock::now();
    const bool pass = check();
    const double t = seconds_since(start);
    ok = ok && pass && t < 1.0;
    detail += (detail.empty() ? "" : "; ") + name + (pass ? " ok " : " WRONG ") + fmt(t) + " s";
  };
  timed("classical H(2^4) g=5", [] {
    const SingularityProfile p = singularity_profile(unfold_to_origami(make_classical_table()).surface);
    return p == SingularityProfile::parse("2^4") && genus(p, ProfileKind::kAbelian) == 5;
  });
  timed("chessboard H(2^12)", [] {
    return singularity_profile(unfold_to_origami(make_chessboard_table()).surface) == SingularityProfile::parse("2^12");
  });
  timed("tau_v quotient H(2^6)", [] {
    const Unfolding u = unfold_to_origami(make_chessboard_table());
    const Origami q = quotient_by_translation_involution(u.surface, windtree_symmetries(u).tau_v);
    return q.size() == 26 && singularity_profile(q) == SingularityProfile::parse("2^6");
  });
  return {ok, detail};
}

Outcome appendix_a() {
  const auto start = std::chrono::steady_clock::now();
  OrbitOptions options;
  options.budget = 1'000'000;
  options.jobs = jobs();
  const AppendixAReport r = reproduce_appendix_a(options);
  const double t = seconds_since(start);
  std::string detail = "orbit " + std::to_string(r.orbit_size) + ", sum " + r.sum.total.str() + ", deficit " +
                       r.deficit.str() + ", lambda+ " + r.lambda_plus.str() + ", " + fmt(t) + " s";
  if (!r.passed) {
    detail += "\n       reconciled r = " + r.quotient.r().cycle_string() +
              "\n       reconciled u = " + r.quotient.u().cycle_string() + "\n       printed r: " + r.printed_r_error;
  }
  return {r.passed, detail};
}

Outcome remark_table() {
  OrbitOptions options;
  options.jobs = jobs();
  const auto rows = reproduce_remark_table(options);
  bool ok = true;
  std::string detail;
  for (const auto& row : rows) {
    ok = ok && row.passed;
    detail += (detail.empty() ? "" : "; ");
    if (!row.profile_ok) {
      detail += "profile " + row.profile.label(ProfileKind::kAbelian) + " is not H(2^4)";
    } else {
      detail += "orbit " + std::to_string(row.orbit_size) + " deficit " + row.deficit.str() + " lambda+ " +
                row.lambda_plus.str() + " (expected " + row.expected.str() + ")";
    }
  }
  return {ok, detail};
}

Outcome asymptotics() {
  const AsymptoticComparison a = delta_asymptotic(10000);
  return {a.deviation < Rational(1, 1000), "|ratio - 1| = " + fmt(a.deviation.to_double(), 8) + " at m=10^4"};
}

Outcome simulation() {
  const auto start = std::chrono::steady_clock::now();
  DiffusionOptions empty_options;
  empty_options.t_max = 1e6;
  const DiffusionEstimate empty = estimate_diffusion(Billiard<double>(CellTable(1, 1, {})), 0.3, 0.4, 0.7, empty_options);

  CampaignSpec spec;
  spec.family = {1, 3, 5};
  spec.samples = 32;
  spec.t_max = 1e7;
  spec.seed = 7;
  spec.jobs = jobs();
  const CampaignResult result = campaign(spec);
  const double t = seconds_since(start);

  const CampaignSummary& classical = result.summary.front();
  const bool band = classical.mean_delta_hat >= 0.55 && classical.mean_delta_hat <= 0.80;
  std::string detail = "empty " + fmt(empty.delta_hat) + "; means";
  for (const auto& s : result.summary) {
    detail += " m=" + std::to_string(s.m) + ":" + fmt(s.mean_delta_hat) + "+-" + fmt(s.spread) + " (" +
              std::to_string(s.runs) + " runs, " + std::to_string(s.flagged) + " flagged)";
  }
  detail += "; " + fmt(t, 1) + " s";
  return {empty.delta_hat >= 0.98 && band && result.monotone && t <= 600, detail};
}

Outcome invariants() {
  using testing::PropertyResult;
  const std::pair<const char*, PropertyResult> suites[] = {
      {"relabeling", testing::check_relabeling_invariance(1000, 101)},
      {"cylinder partition", testing::check_cylinder_partition(1000, 102)},
      {"orbit stratum", testing::check_orbit_stratum_constancy(1000, 103)},
      {"genus-0 null sum", testing::check_genus_zero_null_sum(1000, 104)},
      {"unfolding equivalence", testing::check_unfolding_equivalence(1000, 2000, 105)},
  };
  bool ok = true;
  std::string detail;
  for (const auto& [name, r] : suites) {
    ok = ok && r.ok() && r.cases >= 1000;
    detail += (detail.empty() ? "" : "; ") + std::string(name) + " " + std::to_string(r.cases - r.failures) + "/" +
              std::to_string(r.cases);
    if (!r.ok()) detail += " first failure: " + r.first_failure;
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"closed form", closed_form},
      {"identities", identities},
      {"pipeline consistency", pipeline_consistency},
      {"stratum reproduction", strata},
      {"appendix A orbit", appendix_a},
      {"remark table", remark_table},
      {"asymptotics", asymptotics},
      {"simulation", simulation},
      {"invariant suites", invariants},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += !o.passed;
    std::printf("[%s] %d %s: %s\n", o.passed ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
