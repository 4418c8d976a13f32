// cqkit: command-line front end for the quantization toolkit.
//
// Exit codes: 0 success, 1 usage or input error, 2 validation failure.

#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cq/errors.hpp"
#include "cq/gauge_circle.hpp"
#include "cq/induction.hpp"
#include "cq/reduction.hpp"
#include "cq/spec_io.hpp"
#include "cq/sphere.hpp"
#include "cq/theta.hpp"
#include "verify/acceptance.hpp"

namespace {

using namespace cq;

struct Globals {
  double tol = 1.0;
  std::uint64_t seed = 20240101;
  std::string out;
  std::string format;  // empty: the subcommand's natural format
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty())
    std::cout << text;
  else
    write_text_file(g.out, text);
}

std::string fmt(const Globals& g, const std::string& fallback) { return g.format.empty() ? fallback : g.format; }

Json spectrum_json(const RealVector& v) { return to_json(v); }

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

// --- sphere-check -----------------------------------------------------------

int sphere_check(const Globals& g, const std::string& f_text, const std::string& g_text, const std::vector<int>& two_js) {
  const auto f = PolynomialObservable::parse(f_text);
  const auto h = PolynomialObservable::parse(g_text);
  std::vector<SpinLevel> levels;
  for (int tj : two_js) {
    if (tj < 1) throw InputError("--two-j entries must be >= 1");
    levels.emplace_back(tj);
  }
  const auto rows = strict_quantization_report(f, h, levels);
  if (fmt(g, "csv") == "json") {
    Json list = Json::array();
    for (const auto& r : rows)
      list.push_back(Json{{"two_j", r.two_j},
                          {"hbar", r.hbar},
                          {"dirac_defect", r.dirac_defect},
                          {"jordan_defect", r.jordan_defect},
                          {"norm_defect", r.norm_defect}});
    emit(g, dump_json(Json{{"f", f.to_string()}, {"g", h.to_string()}, {"levels", list}}));
    return 0;
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows)
    cells.push_back({std::to_string(r.two_j), format_number(r.hbar), format_number(r.dirac_defect),
                     format_number(r.jordan_defect), format_number(r.norm_defect)});
  emit(g, to_csv({"two_j", "hbar", "dirac_defect", "jordan_defect", "norm_defect"}, cells));
  return 0;
}

// --- reduce -------------------------------------------------------------------

int reduce_cmd(const Globals& g, const std::string& spec) {
  const auto problem = reduction_problem_from_json(load_json_file(spec));
  const auto r = reduce(problem.j, problem.j_rho);
  Json out{{"source_dim", r.source_dim},
           {"ambient_dim", r.ambient_dim},
           {"constraint_dim", r.constraint.dim()},
           {"quotient_dim", r.quotient_dim},
           {"radical_basis", to_json(r.radical_basis)},
           {"reduced_omega", to_json(r.reduced_omega)},
           {"form_singular_values", r.form_singular_values}};
  // Marsden-Weinstein comparison only makes sense at the zero level of a point target.
  if (problem.point_target && problem.j.b().isZero(0.0) && problem.j_rho.b().isZero(0.0)) {
    const auto mw = marsden_weinstein(problem.j);
    Json m{{"quotient_dim", mw.quotient_dim}};
    if (mw.quotient_dim == r.quotient_dim) m["congruence_residual"] = congruence_residual(mw, r);
    out["marsden_weinstein"] = m;
  }
  emit(g, dump_json(out));
  return 0;
}

// --- induce -------------------------------------------------------------------

int induce_cmd(const Globals& g, const std::string& spec, const std::string& observables, bool with_v) {
  const Tolerances tol = Tolerances{}.scaled(g.tol);
  const auto c = induction_case_from_json(load_json_file(spec));
  InductionResult r = c.gram ? induce_from_gram(HermitianOperator(*c.gram, tol.hermiticity), c.gram->rows(), 1, tol)
                             : group_average_induction(*c.u, *c.rho, tol);
  std::mt19937_64 rng(g.seed);
  Json out{{"module_dim", r.module_dim},
           {"rho_dim", r.rho_dim},
           {"induced_dim", r.induced_dim},
           {"null_threshold", r.null_threshold},
           {"min_gram_eigenvalue", r.min_gram_eigenvalue},
           {"kept_spectrum", spectrum_json(r.kept_eigenvalues)},
           {"isometry_residual", r.isometry_residual(rng)}};
  if (c.u) out["dimension_oracle"] = induced_dimension_oracle(*c.u, *c.rho);
  if (with_v) out["V"] = to_json(r.v);
  if (!observables.empty()) {
    Json ops = Json::array();
    for (const auto& a : observables_from_json(load_json_file(observables))) {
      const auto op = r.induce(a);
      Json o{{"matrix", to_json(op.matrix)}, {"residual", op.residual}};
      if (is_hermitian(op.matrix, tol.hermiticity)) o["spectrum"] = spectrum_json(eigenvalues(HermitianOperator(op.matrix, tol.hermiticity)));
      ops.push_back(o);
    }
    out["operators"] = ops;
  }
  emit(g, dump_json(out));
  return 0;
}

// --- gauge-circle -------------------------------------------------------------

Json observable_json(const PhysicalSpace& space, const std::string& name, Observable obs) {
  const auto r = induced_observable(space, obs);
  return Json{{"name", name},
              {"spectrum", spectrum_json(r.spectrum)},
              {"reference_spectrum", spectrum_json(r.reference_spectrum)},
              {"residual", r.induced.residual},
              {"intertwiner_residual", r.intertwiner_residual}};
}

int gauge_circle_cmd(const Globals& g, const std::string& group, int links, bool based, std::optional<int> cutoff) {
  const bool u1 = cutoff.has_value() || group == "U1" || group == "U(1)";
  if (u1 && !cutoff) throw InputError("U(1) needs --u1-cutoff");
  const LatticeGaugeModel model =
      u1 ? LatticeGaugeModel::u1(*cutoff, links, based)
         : LatticeGaugeModel::finite(std::make_shared<const FiniteGroup>(FiniteGroup::preset(group)), links, based);
  const auto space = physical_space(model, Tolerances{}.scaled(g.tol));
  Json obs = Json::array();
  obs.push_back(observable_json(space, "electric", {ObservableKind::electric, 0}));
  if (u1) {
    for (int n = 0; n <= 1; ++n) obs.push_back(observable_json(space, "wilson_charge_" + std::to_string(n), {ObservableKind::wilson, n}));
  } else {
    const auto irreps = builtin_irreps(model.group);
    for (int k = 0; k < static_cast<int>(irreps.size()); ++k)
      obs.push_back(observable_json(space, "wilson_irrep_" + std::to_string(k), {ObservableKind::wilson, k}));
  }
  Json out{{"group", u1 ? std::string("U1") : model.group->name()},
           {"links", links},
           {"based", based},
           {"unconstrained_dim", model.hilbert_dim()},
           {"physical_dim", space.induction.induced_dim},
           {"kept_spectrum", spectrum_json(space.induction.kept_eigenvalues)},
           {"reference_labels", space.reference_labels},
           {"intertwiner_residual", space.intertwiner_residual},
           {"projector_residual", space.projector_residual},
           {"observables", obs}};
  if (u1) out["u1_cutoff"] = *cutoff;
  emit(g, dump_json(out));
  return 0;
}

// --- theta --------------------------------------------------------------------

int theta_cmd(const Globals& g, int n, int m, std::optional<int> sector) {
  const Tolerances tol = Tolerances{}.scaled(g.tol);
  std::vector<int> sectors;
  if (sector)
    sectors.push_back(*sector);
  else
    for (int k = 0; k < m; ++k) sectors.push_back(k);
  std::vector<ThetaSector> results;
  for (int k : sectors) results.push_back(theta_sector({n, m, k}, tol));
  if (fmt(g, "csv") == "json") {
    Json list = Json::array();
    for (const auto& s : results)
      list.push_back(Json{{"sector", s.problem.sector},
                          {"induced_dim", s.induction.induced_dim},
                          {"spectrum", spectrum_json(s.spectrum)},
                          {"closed_form", spectrum_json(theta_closed_form(s.problem))}});
    emit(g, dump_json(Json{{"sites_n", n}, {"gauge_m", m}, {"sectors", list}}));
    return 0;
  }
  std::vector<std::string> header{"sector"};
  for (int i = 0; i < n; ++i) header.push_back("e" + std::to_string(i));
  std::vector<std::vector<std::string>> cells;
  for (const auto& s : results) {
    std::vector<std::string> row{std::to_string(s.problem.sector)};
    for (Eigen::Index i = 0; i < s.spectrum.size(); ++i) row.push_back(format_number(s.spectrum(i)));
    cells.push_back(row);
  }
  emit(g, to_csv(header, cells));
  return 0;
}

// --- anomaly ------------------------------------------------------------------

int anomaly_cmd(const Globals& g, const std::string& spec, int max_order) {
  const auto p = projective_rep_from_json(load_json_file(spec));
  const auto v = is_anomalous(p, max_order);
  const auto probe = anomalous_induction_probe(p, trivial_rep(p.group));
  Json cert;
  if (v.beta) {
    Json beta = Json::array();
    for (const auto b : *v.beta) beta.push_back(complex_json(b));
    cert = Json{{"kind", "coboundary"}, {"beta", beta}};
  } else if (v.witness_pair) {
    cert = Json{{"kind", "commuting_pair"},
                {"x", p.group->label(v.witness_pair->first)},
                {"y", p.group->label(v.witness_pair->second)},
                {"omega_ratio", complex_json(v.witness_value)}};
  } else {
    cert = Json{{"kind", "none"}};
  }
  emit(g, dump_json(Json{{"group", p.group->name()},
                         {"dim", p.dim()},
                         {"cocycle_defect", p.cocycle_defect},
                         {"anomalous", v.anomalous},
                         {"exhaustive", v.exhaustive},
                         {"root_order", v.root_order},
                         {"certificate", cert},
                         {"idempotency_defect", probe.idempotency_defect},
                         {"is_projection", probe.is_projection}}));
  return 0;
}

// --- verify-all ---------------------------------------------------------------

int verify_all(const Globals& g) {
  verify::Options opt;
  opt.seed = g.seed;
  opt.tol_scale = g.tol;
  const auto results = verify::run_all(opt);
  const std::string f = fmt(g, "text");
  if (f == "json") {
    emit(g, dump_json(verify::to_json(results)));
  } else if (f == "csv") {
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : results) cells.push_back({std::to_string(r.id), r.name, r.pass ? "pass" : "fail", r.detail});
    emit(g, to_csv({"id", "name", "result", "detail"}, cells));
  } else {
    emit(g, verify::render(results));
  }
  bool ok = true;
  for (const auto& r : results)
    if (!r.pass) {
      std::cerr << "criterion " << r.id << " (" << r.name << ") failed\n";
      ok = false;
    }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cqkit: constrained quantization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "Scale every module tolerance by this factor")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));

  std::function<int()> action;

  auto* sphere = app.add_subcommand("sphere-check", "Strict-quantization defects of Q(f), Q(g) per spin level");
  std::string f_text = "nx", g_text = "ny";
  std::vector<int> two_js = {4, 8, 16, 32};
  sphere->add_option("--f", f_text, "Polynomial in nx, ny, nz, e.g. \"2.5*nx^2*nz - ny\"");
  sphere->add_option("--g", g_text, "Second polynomial");
  sphere->add_option("--two-j", two_js, "Comma-separated levels 2j")->delimiter(',');
  sphere->callback([&] { action = [&] { return sphere_check(g, f_text, g_text, two_js); }; });

  auto* red = app.add_subcommand("reduce", "Linear symplectic reduction of a JSON problem");
  std::string reduce_spec;
  red->add_option("--spec", reduce_spec, "Problem file")->required();
  red->callback([&] { action = [&] { return reduce_cmd(g, reduce_spec); }; });

  auto* ind = app.add_subcommand("induce", "Rieffel induction of a module or group-averaging case");
  std::string induce_spec, obs_file;
  bool with_v = false;
  ind->add_option("--spec", induce_spec, "Case file")->required();
  ind->add_option("--observables", obs_file, "Observables file (list of matrices)");
  ind->add_flag("--with-v", with_v, "Include the map V in the output");
  ind->callback([&] { action = [&] { return induce_cmd(g, induce_spec, obs_file, with_v); }; });

  auto* gauge = app.add_subcommand("gauge-circle", "Physical space of lattice gauge theory on a circle");
  std::string group = "S3";
  int links = 3;
  bool based = false;
  std::optional<int> cutoff;
  gauge->add_option("--group", group, "Preset group (Z4, S3, D4, Q8, ...) or U1");
  gauge->add_option("--links", links, "Number of links N")->check(CLI::PositiveNumber);
  gauge->add_flag("--based", based, "Use based gauge transformations");
  gauge->add_option("--u1-cutoff", cutoff, "Fourier cutoff K per link; selects U(1)");
  gauge->callback([&] { action = [&] { return gauge_circle_cmd(g, group, links, based, cutoff); }; });

  auto* theta = app.add_subcommand("theta", "Theta-sector spectra of the ring Laplacian");
  int sites_n = 8, gauge_m = 4;
  std::optional<int> sector;
  theta->add_option("--sites-n", sites_n, "Sites per gauge period N");
  theta->add_option("--gauge-m", gauge_m, "Order M of the large gauge group");
  theta->add_option("--sector", sector, "Single sector k (default: all)");
  theta->callback([&] { action = [&] { return theta_cmd(g, sites_n, gauge_m, sector); }; });

  auto* anom = app.add_subcommand("anomaly", "Decide whether a projective representation is anomalous");
  std::string anomaly_spec;
  int max_order = 8;
  anom->add_option("--spec", anomaly_spec, "Projective representation file")->required();
  anom->add_option("--max-order", max_order, "Largest root-of-unity order searched");
  anom->callback([&] { action = [&] { return anomaly_cmd(g, anomaly_spec, max_order); }; });

  auto* all = app.add_subcommand("verify-all", "Run the acceptance suite");
  all->callback([&] { action = [&] { return verify_all(g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const ValidationError& e) {
    std::cerr << "validation failed (" << e.invariant() << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
