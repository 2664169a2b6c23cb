#pragma once

#include <vector>

#include "windtree/origami.hpp"
#include "windtree/rational.hpp"

namespace windtree {

/// (1/24) sum d (d + 4) / (d + 2) over a quadratic profile.
Rational kappa(const SingularityProfile& quadratic);

/// Genus-zero strata: c_area = -3 kappa / pi^2.
SVValue c_area_genus0(const SingularityProfile& quadratic);

/// Pocket bounded by a pole pair and the zero of order d_i, k singularities in total:
/// (d_i + 1) / (k - 4) / (2 pi^2).
SVValue c_pocket_detailed(int d_i, int k);
/// Summed over the zeros of the stratum: 1 / (2 pi^2).
SVValue c_pocket(int k);
/// Dumbbell joining zeros d_i, d_j that splits the sphere into parts with k1 and k2
/// singularities: (d_i + 1)(d_j + 1)/2 * (k1 - 3)! (k2 - 3)! / (k - 4)! / pi^2.
SVValue c_dumbbell(int d_i, int d_j, int k1, int k2, int k);

/// c_area = sum c_C / (k - 3).
SVValue compose_c_area(const std::vector<SVValue>& constants, int k);

/// (1/4) sum 1 / (d + 2) over the ramification points of a double cover.
Rational delta_kappa(const std::vector<int>& ramified_orders);

enum class Monodromy { kTrivial, kNontrivial };

/// Multiplier of c in c_tilde - 2c: -3/2 when the cover has a cylinder twice wider,
/// 0 when the cylinder lifts to two copies.
Rational monodromy_weight(Monodromy kind);

struct DumbbellTerm {
  long m1 = 0;  // zeros on the side carrying one ramified pole
  long k1 = 0;
  long k2 = 0;
  Integer multiplicity;
  SVValue constant;      // c_dumbbell for one configuration
  Rational contribution;  // (pi^2/3) * weight * multiplicity * constant / (k - 3)
};

struct PipelineReport {
  long m = 0;
  long k = 0;
  Integer pocket_multiplicity;
  SVValue pocket_constant;
  Rational pocket_term;
  std::vector<DumbbellTerm> dumbbells;
  Rational dumbbell_term;
  SVValue delta_c_tilde;
  Rational delta_kappa_tilde;
  /// -1 + (2m)!!/(2m+1)!!
  Rational identity_value;
  Rational lambda_plus;
  Rational closed_form;
  /// pocket + dumbbell == identity_value and lambda_plus == closed_form.
  bool consistent = false;
};

/// Lambda^+ of the hyperelliptic locus over Q(1^m, -1^(m+4)), ramified over four poles.
PipelineReport lambda_plus_pipeline(long m);

}  // namespace windtree
