#pragma once

#include <string>
#include <vector>

#include "windtree/origami.hpp"
#include "windtree/rational.hpp"
#include "windtree/teichmuller.hpp"

namespace windtree {

/// Cycles printed for the 26-square quotient surface; the r line repeats symbols.
inline constexpr const char* kPrintedHatR =
    "(1,2,16,14,15,3)(4,5,6,7)(8,22)(9,21)(10,11,12,13)(14,15,16)(17,18,19,20)(23,24,25,26)";
inline constexpr const char* kPrintedHatU =
    "(1,4,10)(2,5,9,11)(3,7,8,13)(6,12)(14,17,23)(15,18,22,24)(16,20,21,26)(19,25)";

struct AppendixAReport {
  Origami cover;  // chessboard unfolding, 52 squares
  SingularityProfile cover_profile;
  Origami quotient;  // cover / tau_v, 26 squares
  SingularityProfile quotient_profile;
  bool printed_r_rejected = false;
  std::string printed_r_error;
  std::size_t orbit_size = 0;
  LyapunovSumReport sum;
  SingularityProfile quadratic;  // Q(1^6, -1^6)
  Rational deficit;
  Rational lambda_plus;
  bool passed = false;
};

AppendixAReport reproduce_appendix_a(const OrbitOptions& options = {});

struct RemarkRow {
  std::string r;
  std::string u;
  Rational expected;
  SingularityProfile profile;
  bool profile_ok = false;  // H(2^4)
  std::size_t orbit_size = 0;
  Rational total;
  Rational deficit;
  Rational lambda_plus;
  bool passed = false;
};

std::vector<RemarkRow> reproduce_remark_table(const OrbitOptions& options = {});

struct TheoremRow {
  long m = 0;
  Rational pipeline;
  Rational closed_form;
  bool consistent = false;
};

struct TheoremReport {
  std::vector<TheoremRow> rows;
  long asymptotic_m = 0;
  Rational asymptotic_deviation;
  bool passed = false;
};

/// Pipeline against (2m)!!/(2m+1)!! for m = 1..max_m, and the asymptotic check at m = 10^4.
TheoremReport reproduce_theorem(long max_m = 50);

}  // namespace windtree
