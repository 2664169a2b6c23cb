#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "windtree/billiard.hpp"
#include "windtree/combinatorics.hpp"
#include "windtree/error.hpp"
#include "windtree/identities.hpp"
#include "windtree/origami.hpp"
#include "windtree/parallel.hpp"
#include "windtree/reproduce.hpp"
#include "windtree/siegel_veech.hpp"
#include "windtree/table.hpp"
#include "windtree/teichmuller.hpp"

using json = nlohmann::ordered_json;
using namespace windtree;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json origami_json(const Origami& o) { return {{"n", o.size()}, {"r", o.r().cycle_string()}, {"u", o.u().cycle_string()}}; }

json orbit_json(const OrbitData& data, const LyapunovSumReport& sum, bool representatives) {
  json j = {{"size", data.size()},
            {"profile", data.profile.label(ProfileKind::kAbelian)},
            {"kappa", sum.kappa_abelian.str()},
            {"mean_cyl_sum", sum.mean_cylinder_sum.str()},
            {"total_num", sum.total.numerator().get_str()},
            {"total_den", sum.total.denominator().get_str()}};
  if (representatives) {
    json reps = json::array();
    for (const auto& o : data.representatives) reps.push_back(origami_json(o));
    j["representatives"] = reps;
  }
  return j;
}

CellTable cell_table(const std::string& path) {
  const WindTreeTable t = parse_table(read_file(path));
  if (const auto* cells = std::get_if<CellTable>(&t)) return *cells;
  return rasterize(std::get<PolygonTable>(t));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_reproduce(const std::string& target, const OrbitOptions& orbit_options) {
  if (target == "appendix-a") {
    const AppendixAReport r = reproduce_appendix_a(orbit_options);
    emit({{"cover", {{"squares", r.cover.size()}, {"profile", r.cover_profile.label(ProfileKind::kAbelian)}}},
          {"quotient", origami_json(r.quotient)},
          {"quotient_profile", r.quotient_profile.label(ProfileKind::kAbelian)},
          {"printed_r_rejected", r.printed_r_rejected},
          {"printed_r_error", r.printed_r_error},
          {"orbit_size", r.orbit_size},
          {"orbit_sum", r.sum.total.str()},
          {"deficit", r.deficit.str()},
          {"lambda_plus", r.lambda_plus.str()},
          {"passed", r.passed}});
    return r.passed ? 0 : 1;
  }
  if (target == "remark-table") {
    const auto rows = reproduce_remark_table(orbit_options);
    json out = json::array();
    bool ok = true;
    for (const auto& row : rows) {
      if (!row.profile_ok) {
        std::cerr << "profile " << row.profile.label(ProfileKind::kAbelian) << " is not H(2^4); pipeline not applied\n";
      }
      out.push_back({{"r", row.r},
                     {"u", row.u},
                     {"profile", row.profile.label(ProfileKind::kAbelian)},
                     {"profile_ok", row.profile_ok},
                     {"orbit_size", row.orbit_size},
                     {"total", row.total.str()},
                     {"deficit", row.deficit.str()},
                     {"lambda_plus", row.lambda_plus.str()},
                     {"expected", row.expected.str()},
                     {"passed", row.passed}});
      ok = ok && row.passed;
    }
    emit({{"rows", out}, {"passed", ok}});
    return ok ? 0 : 1;
  }
  if (target == "theorem-2.1") {
    const TheoremReport r = reproduce_theorem();
    json rows = json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"m", row.m}, {"lambda_plus", row.pipeline.str()}, {"closed_form", row.closed_form.str()},
                      {"consistent", row.consistent}});
    }
    emit({{"rows", rows},
          {"asymptotic_m", r.asymptotic_m},
          {"asymptotic_deviation", r.asymptotic_deviation.to_double()},
          {"passed", r.passed}});
    return r.passed ? 0 : 1;
  }
  throw Error(ErrorKind::kParse, "unknown target '" + target + "'");
}

json summary_json(const CampaignSummary& s) {
  return {{"m", s.m},
          {"runs", s.runs},
          {"flagged", s.flagged},
          {"mean_delta_hat", s.mean_delta_hat},
          {"spread", s.spread},
          {"closed_form", s.closed_form.str()},
          {"closed_form_value", s.closed_form.to_double()}};
}

json rows_json(const std::vector<SampleRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"m", r.m},
                   {"seed", r.seed},
                   {"direction", r.direction},
                   {"t", r.t},
                   {"max_disp", r.max_disp},
                   {"delta_hat", std::isnan(r.delta_hat) ? json(nullptr) : json(r.delta_hat)},
                   {"corner_hit", r.corner_hit}});
  }
  return out;
}

void write_csv(const std::string& path, const std::vector<SampleRow>& rows) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kParse, "cannot write " + path);
  out << to_csv(rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wind-tree diffusion rates: exact Lyapunov/Siegel-Veech computations and billiard simulation"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* origami_cmd = app.add_subcommand("origami", "Analyze a square-tiled surface");
  origami_cmd->require_subcommand(1);
  std::string origami_file;
  bool representatives = false;
  std::string quadratic_text;
  auto* analyze = origami_cmd->add_subcommand("analyze", "Profile, genus, cylinders, symmetries");
  analyze->add_option("file", origami_file)->required();
  auto* orbit_cmd = origami_cmd->add_subcommand("orbit", "SL(2,Z)-orbit and cylinder statistics");
  orbit_cmd->add_option("file", origami_file)->required();
  orbit_cmd->add_flag("--representatives", representatives, "List the orbit members");
  auto* lyapunov = origami_cmd->add_subcommand("lyapunov", "Sum of Lyapunov exponents over the orbit");
  lyapunov->add_option("file", origami_file)->required();
  lyapunov->add_option("--quadratic", quadratic_text, "Quadratic profile, e.g. Q(1^4,-1^4), to extract lambda_1^+");

  auto* windtree_cmd = app.add_subcommand("windtree", "Unfold an integer wind-tree table");
  windtree_cmd->require_subcommand(1);
  std::string table_file;
  bool diagonal = false;
  std::string involution = "tau_v";
  auto* build = windtree_cmd->add_subcommand("build", "Unfolded origami and family data");
  build->add_option("spec", table_file)->required();
  build->add_flag("--diagonal", diagonal, "Quotient by the diagonal index-2 sublattice");
  auto* symmetries = windtree_cmd->add_subcommand("symmetries", "tau_h, tau_v and iota");
  symmetries->add_option("spec", table_file)->required();
  symmetries->add_flag("--diagonal", diagonal, "Quotient by the diagonal index-2 sublattice");
  auto* quotient = windtree_cmd->add_subcommand("quotient", "Quotient by tau_h or tau_v");
  quotient->add_option("spec", table_file)->required();
  quotient->add_option("--by", involution, "tau_h or tau_v")->check(CLI::IsMember({"tau_h", "tau_v"}));

  auto* sv_cmd = app.add_subcommand("sv", "Siegel-Veech pipeline");
  sv_cmd->require_subcommand(1);
  long sv_m = 1;
  auto* pipeline = sv_cmd->add_subcommand("pipeline", "Itemized lambda^+ computation for B(m)");
  pipeline->add_option("--m", sv_m)->required()->check(CLI::PositiveNumber);

  long max_m = 200;
  auto* identities_cmd = app.add_subcommand("identities", "Verify the binomial identities");
  identities_cmd->add_option("--max-m", max_m)->check(CLI::NonNegativeNumber);

  std::string sim_table;
  DiffusionOptions sim;
  int sim_samples = 8;
  std::uint64_t sim_seed = 1;
  std::string csv_path;
  auto* simulate = app.add_subcommand("simulate", "Estimate the diffusion rate by simulation");
  simulate->add_option("--table", sim_table, "Table file, or generic:M for a stepped cross of B(M)")->required();
  simulate->add_option("--t-max", sim.t_max)->check(CLI::PositiveNumber);
  simulate->add_option("--samples", sim_samples)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_seed);
  simulate->add_option("--schedule", sim.samples, "Schedule points")->check(CLI::Range(12, 100000));
  simulate->add_option("--window", sim.window)->check(CLI::Range(0.05, 1.0));
  simulate->add_option("--csv", csv_path, "Also write per-sample CSV");

  std::string config_file;
  auto* campaign_cmd = app.add_subcommand("campaign", "Diffusion estimates across a family of tables");
  campaign_cmd->add_option("--config", config_file)->required();
  campaign_cmd->add_option("--csv", csv_path, "Also write per-sample CSV");

  std::string target;
  auto* reproduce = app.add_subcommand("reproduce", "Golden-path checks");
  reproduce->add_option("target", target)->required()->check(
      CLI::IsMember({"appendix-a", "remark-table", "theorem-2.1"}));

  CLI11_PARSE(app, argc, argv);

  OrbitOptions orbit_options;
  orbit_options.budget = orbit_budget_from_env();
  orbit_options.jobs = jobs;

  try {
    if (analyze->parsed()) {
      const Origami o = Origami::parse(read_file(origami_file));
      json j = origami_json(o);
      j["connected"] = is_connected(o);
      if (is_connected(o)) {
        const SingularityProfile p = singularity_profile(o);
        const CylinderDecomposition cyl = horizontal_cylinders(o);
        json cylinders = json::array();
        for (const auto& c : cyl.sorted()) cylinders.push_back({c.width, c.height});
        j["profile"] = p.label(ProfileKind::kAbelian);
        j["genus"] = genus(p, ProfileKind::kAbelian);
        j["cylinders"] = cylinders;
        j["cylinder_sum"] = cyl.modulus_sum().str();
        j["translation_automorphisms"] = translation_automorphisms(o).size();
        j["antiautomorphisms"] = antiautomorphisms(o).size();
      }
      emit(j);
      return 0;
    }
    if (orbit_cmd->parsed() || lyapunov->parsed()) {
      const Origami o = Origami::parse(read_file(origami_file));
      const OrbitData data = orbit(o, orbit_options);
      const LyapunovSumReport sum = sum_lyapunov(data, data.profile);
      json j = orbit_json(data, sum, representatives);
      if (lyapunov->parsed()) {
        j["total"] = sum.total.str();
        if (!quadratic_text.empty()) {
          const SingularityProfile q = SingularityProfile::parse(quadratic_text);
          if (orienting_cover_profile(q) != data.profile) {
            std::cerr << "orienting cover of " << q.label(ProfileKind::kQuadratic) << " is "
                      << orienting_cover_profile(q).label(ProfileKind::kAbelian) << ", not "
                      << data.profile.label(ProfileKind::kAbelian) << "\n";
            emit(j);
            return 1;
          }
          j["deficit"] = deficit(q).str();
          j["lambda_plus"] = lambda_plus_from_cover(sum.total, q).str();
        }
      }
      emit(j);
      return 0;
    }
    if (build->parsed() || symmetries->parsed() || quotient->parsed()) {
      const CellTable table = cell_table(table_file);
      const Unfolding u = diagonal ? unfold_diagonal_sublattice(table) : unfold_to_origami(table);
      if (build->parsed()) {
        const SingularityProfile p = singularity_profile(u.surface);
        json j = {{"squares", u.surface.size()},
                  {"free_cells", u.free_cells.size()},
                  {"lattice", {u.lattice.p, u.lattice.q, u.lattice.s}},
                  {"profile", p.label(ProfileKind::kAbelian)},
                  {"genus", genus(p, ProfileKind::kAbelian)},
                  {"origami", origami_json(u.surface)}};
        try {
          const FamilyIndex fi = family_index(table);
          j["family_index"] = {{"m", fi.m},
                               {"convex_corners", fi.convex_corners},
                               {"reflex_corners", fi.reflex_corners},
                               {"dimension", family_dimension(fi.m)}};
        } catch (const Error& e) {
          std::cerr << "family index: " << e.what() << "\n";
          j["family_index"] = nullptr;
        }
        emit(j);
        return 0;
      }
      const WindTreeSymmetries sym = windtree_symmetries(u);
      if (symmetries->parsed()) {
        emit({{"tau_h", sym.tau_h.cycle_string()},
              {"tau_v", sym.tau_v.cycle_string()},
              {"iota", sym.iota.cycle_string()},
              {"group_order", sym.group_order}});
        return 0;
      }
      const Permutation& by = involution == "tau_h" ? sym.tau_h : sym.tau_v;
      const Permutation& other = involution == "tau_h" ? sym.tau_v : sym.tau_h;
      const Origami q = quotient_by_translation_involution(u.surface, by);
      const Permutation pushed = push_through_quotient(u.surface, by, other);
      const SingularityProfile p = singularity_profile(q);
      emit({{"origami", origami_json(q)},
            {"profile", p.label(ProfileKind::kAbelian)},
            {"genus", genus(p, ProfileKind::kAbelian)},
            {"pushed_involution", pushed.cycle_string()},
            {"pushed_is_automorphism", is_translation_automorphism(q, pushed) && pushed.is_involution()}});
      return 0;
    }
    if (pipeline->parsed()) {
      const PipelineReport r = lambda_plus_pipeline(sv_m);
      json dumbbells = json::array();
      for (const auto& d : r.dumbbells) {
        dumbbells.push_back({{"m1", d.m1},
                             {"k1", d.k1},
                             {"k2", d.k2},
                             {"multiplicity", d.multiplicity.get_str()},
                             {"c_dumbbell", d.constant.str()},
                             {"contribution", d.contribution.str()}});
      }
      emit({{"m", r.m},
            {"k", r.k},
            {"pocket", {{"multiplicity", r.pocket_multiplicity.get_str()},
                        {"c_pocket", r.pocket_constant.str()},
                        {"term", r.pocket_term.str()}}},
            {"dumbbells", dumbbells},
            {"dumbbell_term", r.dumbbell_term.str()},
            {"delta_c_tilde", r.delta_c_tilde.str()},
            {"delta_kappa_tilde", r.delta_kappa_tilde.str()},
            {"identity_value", r.identity_value.str()},
            {"lambda_plus", r.lambda_plus.str()},
            {"closed_form", r.closed_form.str()},
            {"consistent", r.consistent}});
      return r.consistent ? 0 : 1;
    }
    if (identities_cmd->parsed()) {
      const IdentityReport ids = verify_identities(max_m, jobs);
      const RecurrenceReport rec = s3_recurrence_check(max_m);
      json checks = json::array();
      for (const auto& c : ids.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"counterexample", c.counterexample ? json(*c.counterexample) : json(nullptr)}});
      }
      checks.push_back({{"name", "recurrence_factorial_form"},
                        {"passed", rec.factorial_form_passed},
                        {"counterexample", rec.factorial_form_counterexample ? json(*rec.factorial_form_counterexample)
                                                                             : json(nullptr)}});
      const bool ok = ids.all_passed() && rec.factorial_form_passed;
      json discrepancy = nullptr;
      if (rec.s3_first_nonzero) {
        discrepancy = {{"sum", "s3"}, {"m", *rec.s3_first_nonzero}, {"residual", rec.s3_first_residual.str()}};
      }
      emit({{"max_m", max_m}, {"checks", checks}, {"recurrence_on_s3", discrepancy}, {"passed", ok}});
      return ok ? 0 : 1;
    }
    if (simulate->parsed()) {
      int m = 0;
      std::optional<Billiard<double>> billiard;
      if (sim_table.rfind("generic:", 0) == 0) {
        m = std::stoi(sim_table.substr(8));
        billiard.emplace(make_generic_table(m));
      } else {
        const WindTreeTable t = parse_table(read_file(sim_table));
        std::visit(
            [&](const auto& table) {
              try {
                m = family_index(table).m;
              } catch (const Error& e) {
                std::cerr << "family index: " << e.what() << "\n";
              }
              billiard.emplace(table);
            },
            t);
      }
      const auto rows = run_samples(*billiard, m, sim_samples, sim_seed, sim, jobs);
      write_csv(csv_path, rows);
      CampaignSummary s;
      s.m = m;
      std::vector<double> values;
      for (const auto& r : rows) {
        if (r.corner_hit || std::isnan(r.delta_hat)) {
          ++s.flagged;
        } else {
          values.push_back(r.delta_hat);
        }
      }
      s.runs = static_cast<int>(values.size());
      for (double v : values) s.mean_delta_hat += v / static_cast<double>(values.size());
      for (double v : values) {
        s.spread += (v - s.mean_delta_hat) * (v - s.mean_delta_hat) / std::max<double>(1.0, values.size() - 1.0);
      }
      s.spread = std::sqrt(s.spread);
      json summary = {{"m", m}, {"runs", s.runs}, {"flagged", s.flagged}, {"mean_delta_hat", s.mean_delta_hat},
                      {"spread", s.spread}};
      if (m > 0) summary["closed_form"] = delta_closed_form(m).str();
      emit({{"estimator", DiffusionEstimate::kEstimatorNote}, {"summary", summary}, {"samples", rows_json(rows)}});
      return s.runs > 0 ? 0 : 1;
    }
    if (campaign_cmd->parsed()) {
      CampaignSpec spec = parse_campaign_config(read_file(config_file));
      if (jobs > 1) spec.jobs = jobs;
      const CampaignResult r = campaign(spec);
      write_csv(csv_path, r.rows);
      json summary = json::array();
      for (const auto& s : r.summary) summary.push_back(summary_json(s));
      emit({{"estimator", DiffusionEstimate::kEstimatorNote},
            {"summary", summary},
            {"monotone", r.monotone},
            {"samples", rows_json(r.rows)}});
      return r.monotone ? 0 : 1;
    }
    if (reproduce->parsed()) return run_reproduce(target, orbit_options);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
