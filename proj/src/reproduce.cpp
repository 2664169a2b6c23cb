#include "windtree/reproduce.hpp"

#include "windtree/combinatorics.hpp"
#include "windtree/error.hpp"
#include "windtree/siegel_veech.hpp"
#include "windtree/table.hpp"

namespace windtree {

AppendixAReport reproduce_appendix_a(const OrbitOptions& options) {
  AppendixAReport report;
  try {
    Origami::validate(26, kPrintedHatR, kPrintedHatU);
  } catch (const Error& e) {
    report.printed_r_rejected = e.kind() == ErrorKind::kMalformedPermutation;
    report.printed_r_error = e.what();
  }

  const Unfolding x = unfold_to_origami(make_chessboard_table());
  report.cover = x.surface;
  report.cover_profile = singularity_profile(x.surface);
  const WindTreeSymmetries sym = windtree_symmetries(x);
  report.quotient = quotient_by_translation_involution(x.surface, sym.tau_v);
  report.quotient_profile = singularity_profile(report.quotient);

  const OrbitData orbit_data = orbit(report.quotient, options);
  report.orbit_size = orbit_data.size();
  report.sum = sum_lyapunov(orbit_data, orbit_data.profile);
  report.quadratic = SingularityProfile({1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1});
  report.deficit = deficit(report.quadratic);
  report.lambda_plus = lambda_plus_from_cover(report.sum.total, report.quadratic);
  report.passed = report.printed_r_rejected && report.cover_profile == SingularityProfile::parse("2^12") &&
                  report.quotient_profile == SingularityProfile::parse("2^6") &&
                  report.sum.total == Rational(3088, 1053) && report.deficit == Rational(2) &&
                  report.lambda_plus == Rational(491, 1053);
  return report;
}

std::vector<RemarkRow> reproduce_remark_table(const OrbitOptions& options) {
  const char* pairs[][2] = {
      {"(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", "(1,3,13,8,2,14)(4,6,11,5,10,12)(7,9)"},
      {"(1,2,3,4,5,6,7,8)(9,10,11,12,13,14)", "(1,2,3,14,9)(4,13)(5,6,7,11,12)(8,10)"},
  };
  const Rational expected[] = {Rational(20, 33), Rational(6, 11)};
  std::vector<RemarkRow> rows(2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].r = pairs[i][0];
    rows[i].u = pairs[i][1];
    rows[i].expected = expected[i];
  }
  const SingularityProfile quadratic({1, 1, 1, 1, -1, -1, -1, -1});
  for (auto& row : rows) {
    const Origami o = Origami::validate(14, row.r, row.u);
    row.profile = singularity_profile(o);
    row.profile_ok = row.profile == orienting_cover_profile(quadratic);
    if (!row.profile_ok) continue;
    const OrbitData data = orbit(o, options);
    row.orbit_size = data.size();
    row.total = sum_lyapunov(data, data.profile).total;
    row.deficit = deficit(quadratic);
    row.lambda_plus = lambda_plus_from_cover(row.total, quadratic);
    row.passed = row.lambda_plus == row.expected;
  }
  return rows;
}

TheoremReport reproduce_theorem(long max_m) {
  TheoremReport report;
  report.passed = true;
  for (long m = 1; m <= max_m; ++m) {
    const PipelineReport p = lambda_plus_pipeline(m);
    report.rows.push_back({m, p.lambda_plus, p.closed_form, p.consistent});
    report.passed = report.passed && p.consistent;
  }
  report.asymptotic_m = 10000;
  report.asymptotic_deviation = delta_asymptotic(report.asymptotic_m).deviation;
  report.passed = report.passed && report.asymptotic_deviation < Rational(1, 1000);
  return report;
}

}  // namespace windtree
