#include "windtree/siegel_veech.hpp"

#include <string>

#include "windtree/combinatorics.hpp"
#include "windtree/error.hpp"

namespace windtree {

Rational kappa(const SingularityProfile& quadratic) {
  Rational s;
  for (int d : quadratic.orders()) s += Rational(d * (d + 4), d + 2);
  return s / Rational(24);
}

SVValue c_area_genus0(const SingularityProfile& quadratic) {
  const int g = genus(quadratic, ProfileKind::kQuadratic);
  if (g != 0) {
    throw Error(ErrorKind::kGenusNotZero, quadratic.label(ProfileKind::kQuadratic) + " has genus " + std::to_string(g));
  }
  return SVValue(Rational(-3) * kappa(quadratic));
}

SVValue c_pocket_detailed(int d_i, int k) {
  if (k < 5) throw Error(ErrorKind::kDomainViolation, "pocket needs k >= 5, got " + std::to_string(k));
  if (d_i < 1) throw Error(ErrorKind::kDomainViolation, "pocket zero order must be positive");
  return SVValue(Rational(d_i + 1, 2L * (k - 4)));
}

SVValue c_pocket(int k) {
  if (k < 5) throw Error(ErrorKind::kDomainViolation, "pocket needs k >= 5, got " + std::to_string(k));
  return SVValue(Rational(1, 2));
}

SVValue c_dumbbell(int d_i, int d_j, int k1, int k2, int k) {
  if (k1 < 3 || k2 < 3 || k1 + k2 != k) {
    throw Error(ErrorKind::kDomainViolation, "dumbbell needs k1, k2 >= 3 and k1 + k2 = k");
  }
  if (d_i < 1 || d_j < 1) throw Error(ErrorKind::kDomainViolation, "dumbbell zero orders must be positive");
  const Rational weight(Integer((d_i + 1) * (d_j + 1)) * factorial(k1 - 3) * factorial(k2 - 3),
                        Integer(2) * factorial(k - 4));
  return SVValue(weight);
}

SVValue compose_c_area(const std::vector<SVValue>& constants, int k) {
  if (k < 4) throw Error(ErrorKind::kDomainViolation, "c_area composition needs k >= 4");
  SVValue sum;
  for (const auto& c : constants) sum += c;
  return Rational(1, k - 3) * sum;
}

Rational delta_kappa(const std::vector<int>& ramified_orders) {
  Rational s;
  for (int d : ramified_orders) {
    if (d < -1) throw Error(ErrorKind::kDomainViolation, "singularity order below -1");
    s += Rational(1, d + 2);
  }
  return s / Rational(4);
}

Rational monodromy_weight(Monodromy kind) { return kind == Monodromy::kNontrivial ? Rational(-3, 2) : Rational(0); }

PipelineReport lambda_plus_pipeline(long m) {
  if (m < 1) throw Error(ErrorKind::kDomainViolation, "pipeline needs m >= 1");
  PipelineReport report;
  report.m = m;
  report.k = 2 * m + 4;
  const int k = static_cast<int>(report.k);
  const Rational to_rational = Rational(1, 3) * monodromy_weight(Monodromy::kNontrivial) / Rational(k - 3);

  // Pockets with nontrivial monodromy: one ramified and one unramified pole, any of the m zeros.
  report.pocket_multiplicity = Integer(4 * m) * Integer(m);
  report.pocket_constant = c_pocket_detailed(1, k);
  const SVValue pockets = Rational(report.pocket_multiplicity) * report.pocket_constant;
  report.pocket_term = to_rational * pockets.pi2_coeff();

  // Dumbbells with nontrivial monodromy split the ramified poles 1 + 3.
  SVValue dumbbells;
  for (long m1 = 1; m1 <= m - 1; ++m1) {
    DumbbellTerm term;
    term.m1 = m1;
    term.k1 = 2 * m1 + 2;
    term.k2 = 2 * (m - m1) + 2;
    term.multiplicity = binomial(m, m1) * binomial(4, 1) * binomial(m, m1 - 1) * Integer(m1) * Integer(m - m1);
    term.constant = c_dumbbell(1, 1, static_cast<int>(term.k1), static_cast<int>(term.k2), k);
    const SVValue total = Rational(term.multiplicity) * term.constant;
    term.contribution = to_rational * total.pi2_coeff();
    dumbbells += total;
    report.dumbbell_term += term.contribution;
    report.dumbbells.push_back(std::move(term));
  }

  report.delta_c_tilde = monodromy_weight(Monodromy::kNontrivial) * compose_c_area({pockets, dumbbells}, k);
  report.delta_kappa_tilde = delta_kappa({-1, -1, -1, -1});
  report.identity_value = delta_closed_form(m) - Rational(1);
  report.lambda_plus = report.delta_kappa_tilde + report.delta_c_tilde.times_pi2_over_3();
  report.closed_form = delta_closed_form(m);
  report.consistent = report.pocket_term + report.dumbbell_term == report.identity_value &&
                      report.lambda_plus == report.closed_form;
  return report;
}

}  // namespace windtree
