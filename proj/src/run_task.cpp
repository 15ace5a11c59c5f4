/* run_task.cpp
 *
 * Config schema (JSON object):
 *   spacetime: { kind: "sds"|"ds"|"kds", n: int,
 *                mass: number, cosmo: number (Lambda), spin: number }
 *   task:      { name: "geometry"|"trapping"|"zero-modes"|"cohomology"|
 *                      "ds-table"|"kds-verify"|"evolve"|"mode-scan",
 *                ...task options... }
 *   numerics:  { npts, order, L, cfl, grids: [..] }          (optional)
 *   output:    { directory: path }                           (optional)
 *   seed:      integer                                       (optional)
 *
 * Exactly one task per run.  CSV files are written with %.17g cells so
 * identical configs give byte-identical tables; the manifest carries
 * the wall time and is the only file allowed to differ between runs.
 */
#include "sdsform/run_task.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "sdsform/block_ops.hpp"
#include "sdsform/cohomology.hpp"
#include "sdsform/desitter.hpp"
#include "sdsform/errors.hpp"
#include "sdsform/evolve.hpp"
#include "sdsform/fit.hpp"
#include "sdsform/geometry.hpp"
#include "sdsform/kds.hpp"
#include "sdsform/mode_scan.hpp"
#include "sdsform/output.hpp"
#include "sdsform/trapping.hpp"
#include "sdsform/zero_modes.hpp"

namespace sdsform {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw ConfigError(msg); }

const json& need(const json& j, const char* key, const char* where) {
  if (!j.contains(key))
    bad(std::string(where) + ": missing required field '" + key + "'");
  return j.at(key);
}

double num_field(const json& j, const char* key, const char* where,
                 std::optional<double> def = std::nullopt) {
  if (!j.contains(key)) {
    if (def) return *def;
    bad(std::string(where) + ": missing required field '" + key + "'");
  }
  const json& v = j.at(key);
  if (!v.is_number())
    bad(std::string(where) + ": field '" + key + "' must be a number");
  return v.get<double>();
}

int int_field(const json& j, const char* key, const char* where,
              std::optional<int> def = std::nullopt) {
  if (!j.contains(key)) {
    if (def) return *def;
    bad(std::string(where) + ": missing required field '" + key + "'");
  }
  const json& v = j.at(key);
  if (!v.is_number_integer())
    bad(std::string(where) + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

std::string str_field(const json& j, const char* key, const char* where,
                      std::optional<std::string> def = std::nullopt) {
  if (!j.contains(key)) {
    if (def) return *def;
    bad(std::string(where) + ": missing required field '" + key + "'");
  }
  const json& v = j.at(key);
  if (!v.is_string())
    bad(std::string(where) + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

struct Spacetime {
  std::string kind; /* sds | ds | kds */
  int n = 4;
  SdsParams sds;
  KdsParams kds;
};

Spacetime parse_spacetime(const json& cfg) {
  const json& sp = need(cfg, "spacetime", "config");
  if (!sp.is_object()) bad("config: 'spacetime' must be an object");
  Spacetime st;
  st.kind = str_field(sp, "kind", "spacetime");
  if (st.kind != "sds" && st.kind != "ds" && st.kind != "kds")
    bad("spacetime: kind must be one of sds, ds, kds");
  st.n = int_field(sp, "n", "spacetime", 4);
  if (st.n < 4)
    bad("spacetime: dimension n must be at least 4 (nondegenerate static "
        "region requires n >= 4)");
  if (st.kind == "sds") {
    st.sds.n = st.n;
    st.sds.mass = num_field(sp, "mass", "spacetime", 1.0);
    st.sds.cosmo = num_field(sp, "cosmo", "spacetime");
    if (!(st.sds.mass > 0)) bad("spacetime: mass must be positive");
    if (!(st.sds.cosmo > 0)) bad("spacetime: cosmo must be positive");
  } else if (st.kind == "kds") {
    if (st.n != 4) bad("spacetime: kind kds is implemented for n = 4 only");
    st.kds.mass = num_field(sp, "mass", "spacetime", 1.0);
    st.kds.cosmo = num_field(sp, "cosmo", "spacetime", 0.03);
    st.kds.spin = num_field(sp, "spin", "spacetime", 0.0);
    if (!(st.kds.mass > 0)) bad("spacetime: mass must be positive");
    if (!(st.kds.cosmo > 0)) bad("spacetime: cosmo must be positive");
    if (st.kds.spin < 0) bad("spacetime: spin must be nonnegative");
  }
  return st;
}

json tagged(double value, const char* operation) {
  return json{{"value", value}, {"operation", operation}};
}
json tagged(bool value, const char* operation) {
  return json{{"value", value}, {"operation", operation}};
}
json tagged(const std::vector<int>& value, const char* operation) {
  return json{{"value", value}, {"operation", operation}};
}

struct TaskOutput {
  std::vector<std::string> files;
  json summary;
};

/* ---- geometry ---- */

TaskOutput task_geometry(const std::string& dir, const Spacetime& st) {
  if (st.kind != "sds") bad("task geometry requires spacetime kind sds");
  const SdsParams& p = st.sds;
  const HorizonData hz = horizons(p);
  const double lam = lambda_small(p);

  TaskOutput out;
  write_csv(dir + "/geometry.csv",
            {"n", "mass", "cosmo", "lambda", "r_minus", "r_plus", "r_p",
             "beta_minus", "beta_plus", "mu_tilde_rp"},
            {num_row({(double)p.n, p.mass, p.cosmo, lam, hz.r_minus,
                      hz.r_plus, hz.r_p, hz.beta_minus, hz.beta_plus,
                      mu_tilde(p, hz.r_p)})});
  out.files.push_back("geometry.csv");
  out.summary["results"] = {
      {"lambda", tagged(lam, "lambda_small")},
      {"r_minus", tagged(hz.r_minus, "horizons")},
      {"r_plus", tagged(hz.r_plus, "horizons")},
      {"r_p", tagged(hz.r_p, "photon_radius")},
      {"beta_minus", tagged(hz.beta_minus, "horizons")},
      {"beta_plus", tagged(hz.beta_plus, "horizons")},
      {"nondegenerate", tagged(check_nondegeneracy(p), "check_nondegeneracy")},
  };
  return out;
}

/* ---- trapping ---- */

TaskOutput task_trapping(const std::string& dir, const Spacetime& st,
                         long seed, const json& task) {
  if (st.kind != "sds") bad("task trapping requires spacetime kind sds");
  const int samples = int_field(task, "escape_samples", "task", 10000);
  if (samples < 100) bad("task trapping: escape_samples must be >= 100");
  const TrappingReport rep =
      trapping_report(st.sds, samples, (std::uint64_t)seed);
  const GapReport gap = gap_condition(st.sds);

  TaskOutput out;
  std::vector<std::vector<std::string>> rows;
  for (const PhasePoint& q : rep.phase_point_sample)
    rows.push_back(num_row({q.r, q.xi, q.eta_sq, q.z}));
  write_csv(dir + "/trapping_sample.csv", {"r", "xi", "eta_sq", "z"}, rows);
  out.files.push_back("trapping_sample.csv");

  out.summary["results"] = {
      {"r_p", tagged(rep.r_p, "photon_radius")},
      {"nu_min", tagged(rep.nu_min, "nu_min")},
      {"fitted_lyapunov", tagged(rep.fitted_lyapunov, "trapping_report")},
      {"subprincipal_eig_plus",
       tagged(rep.subprincipal_eigs[0], "gap_condition")},
      {"subprincipal_eig_minus",
       tagged(rep.subprincipal_eigs[1], "gap_condition")},
      {"gap_condition_holds", tagged(rep.gap_condition_holds, "gap_condition")},
      {"gap_lhs_rp2_lambda", tagged(gap.lhs, "gap_condition")},
      {"gap_rhs_threshold", tagged(gap.rhs, "gap_condition")},
  };
  return out;
}

/* ---- zero modes ---- */

TaskOutput task_zero_modes(const std::string& dir, const Spacetime& st,
                           const json& numerics) {
  if (st.kind != "sds") bad("task zero-modes requires spacetime kind sds");
  const SdsParams& p = st.sds;
  const int npts = int_field(numerics, "npts", "numerics", 257);
  const int order = int_field(numerics, "order", "numerics", 2);
  const ZeroModeBasis basis = basis_u_pm(p);
  const H1Certificate cert = h1_triviality_certificate(p);

  Eigen::JacobiSVD<Eigen::Matrix<double, 2, 4>> svd(matching_system(p));
  const double sv0 = svd.singularValues()(0);
  const double sv1 = svd.singularValues()(1);

  /* box annihilation residual of both modes on a probe grid */
  const HorizonData hz = basis.hor;
  const double pad = 0.02 * (hz.r_plus - hz.r_minus);
  const RadialGrid g =
      RadialGrid::uniform(hz.r_minus + pad, hz.r_plus - pad, npts);
  const AngularSector sec = AngularSector::constant(p.n);
  const BlockRadialOperator box = assemble_box(1, sec, p, g, 0.0, order);
  const double res_plus =
      annihilation_residual(box, section_u_pm(basis.u_plus, p, g));
  const double res_minus =
      annihilation_residual(box, section_u_pm(basis.u_minus, p, g));

  const DualStateTable duals = dual_state_table(p.n);

  TaskOutput out;
  write_csv(dir + "/zero_modes.csv",
            {"mode", "f11", "f12", "f21", "f22"},
            {{
                 "u_plus",
                 g17(basis.u_plus.f11),
                 g17(basis.u_plus.f12),
                 g17(basis.u_plus.f21),
                 g17(basis.u_plus.f22),
             },
             {
                 "u_minus",
                 g17(basis.u_minus.f11),
                 g17(basis.u_minus.f12),
                 g17(basis.u_minus.f21),
                 g17(basis.u_minus.f22),
             }});
  out.files.push_back("zero_modes.csv");

  out.summary["results"] = {
      {"matching_sv_ratio", tagged(sv1 / sv0, "matching_system")},
      {"h1_determinant", tagged(cert.determinant, "h1_triviality_certificate")},
      {"h1_trivial", tagged(cert.trivial, "h1_triviality_certificate")},
      {"box_residual_u_plus", tagged(res_plus, "annihilation_residual")},
      {"box_residual_u_minus", tagged(res_minus, "annihilation_residual")},
      {"dim_K_star", tagged(duals.dim_K_star, "dual_state_table")},
      {"dim_H_star", tagged(duals.dim_H_star, "dual_state_table")},
      {"orthogonal_by_degree",
       tagged(duals.orthogonal_by_degree, "dual_state_table")},
  };
  return out;
}

/* ---- cohomology ---- */

TaskOutput task_cohomology(const std::string& dir, const Spacetime& st) {
  if (st.kind == "kds") bad("task cohomology requires spacetime kind sds or ds");
  const int n = st.n;
  const bool is_sds = st.kind == "sds";
  const BettiData betti = is_sds ? betti_sds(n) : betti_ds(n);

  std::vector<std::string> header = {"quantity"};
  for (int k = 0; k <= n; ++k) header.push_back("k" + std::to_string(k));

  std::vector<int> dimk, hexact;
  for (int k = 0; k <= n; ++k) {
    dimk.push_back(dim_K(k, betti));
    hexact.push_back(is_sds ? exact_h_sds(n, k) : exact_h_ds(n, k));
  }
  auto int_cells = [](const std::string& label, const std::vector<int>& v) {
    std::vector<std::string> cells = {label};
    for (int x : v) cells.push_back(std::to_string(x));
    return cells;
  };
  std::vector<int> pad_abs = betti.b_absolute, pad_bnd = betti.b_boundary,
                   pad_rel = betti.b_relative;
  pad_abs.push_back(0); /* betti arrays cover degrees 0..n-1 */
  pad_bnd.push_back(0);
  pad_rel.push_back(0);

  write_csv(dir + "/cohomology.csv", header,
            {int_cells("K", dimk), int_cells("H", hexact),
             int_cells("betti_abs", pad_abs), int_cells("betti_rel", pad_rel),
             int_cells("betti_bnd", pad_bnd)});

  TaskOutput out;
  out.files.push_back("cohomology.csv");
  out.summary["results"] = {
      {"dim_K", tagged(dimk, "dim_K")},
      {"dim_H", tagged(hexact, is_sds ? "exact_h_sds" : "exact_h_ds")},
  };
  return out;
}

/* ---- de Sitter indicial table ---- */

TaskOutput task_ds_table(const std::string& dir, const Spacetime& st) {
  if (st.kind != "ds") bad("task ds-table requires spacetime kind ds");
  const IndicialTable table = table_41(st.n);
  std::vector<std::vector<std::string>> rows;
  for (const IndicialRow& row : table.rows) {
    std::vector<std::string> cells = {std::to_string(row.k)};
    if (row.has_tangential) {
      cells.push_back(g17(row.tangential_roots[0]));
      cells.push_back(g17(row.tangential_roots[1]));
    } else {
      cells.push_back("");
      cells.push_back("");
    }
    if (row.has_normal) {
      cells.push_back(g17(row.normal_roots[0]));
      cells.push_back(g17(row.normal_roots[1]));
    } else {
      cells.push_back("");
      cells.push_back("");
    }
    cells.push_back(g17(row.ddelta_roots[0]));
    cells.push_back(g17(row.ddelta_roots[1]));
    rows.push_back(cells);
  }
  write_csv(dir + "/ds_indicial.csv",
            {"k", "tangential_root_0", "tangential_root_1", "normal_root_0",
             "normal_root_1", "ddelta_root_0", "ddelta_root_1"},
            rows);

  const DsStaticStates states = ds_static_states(st.n);
  TaskOutput out;
  out.files.push_back("ds_indicial.csv");
  out.summary["results"] = {
      {"dims", tagged(states.dims, "ds_static_states")},
  };
  return out;
}

/* ---- Kerr-de Sitter field verification ---- */

TaskOutput task_kds_verify(const std::string& dir, const Spacetime& st,
                           const json& task, const json& numerics) {
  if (st.kind != "kds") bad("task kds-verify requires spacetime kind kds");
  std::vector<int> grids = {32, 64, 128, 256};
  if (numerics.contains("grids")) {
    grids.clear();
    for (const auto& v : numerics.at("grids")) {
      if (!v.is_number_integer())
        bad("numerics: grids entries must be integers");
      grids.push_back(v.get<int>());
    }
    if (grids.size() < 2) bad("numerics: grids needs at least two entries");
  }
  const double r_lo = num_field(task, "r_lo", "task", 3.0);
  const double r_hi = num_field(task, "r_hi", "task", 6.0);
  if (!(r_lo > 0) || !(r_hi > r_lo)) bad("task kds-verify: bad radial range");

  std::vector<std::vector<std::string>> rows;
  std::vector<double> hs, du_res, delta_res;
  double control = 0;
  for (int ng : grids) {
    if (ng < 8) bad("task kds-verify: grid sizes must be >= 8");
    const Grid2D g = Grid2D::make(r_lo, r_hi, ng, ng);
    const double du = verify_closed(st.kds, g, KdsField::UA1).max_residual;
    const double dd = verify_coclosed(st.kds, g, KdsField::UA1).max_residual;
    const double du2 = verify_closed(st.kds, g, KdsField::UA2).max_residual;
    const double dd2 = verify_coclosed(st.kds, g, KdsField::UA2).max_residual;
    const double ctl =
        verify_coclosed(st.kds, g, KdsField::UA1Perturbed).max_residual;
    control = ctl;
    hs.push_back(1.0 / ng);
    du_res.push_back(std::max(du, du2));
    delta_res.push_back(std::max(dd, dd2));
    rows.push_back(num_row({(double)ng, du, dd, du2, dd2, ctl}));
  }
  write_csv(dir + "/kds_residuals.csv",
            {"grid", "du_ua1", "delta_ua1", "du_ua2", "delta_ua2",
             "control_delta"},
            rows);

  TaskOutput out;
  out.files.push_back("kds_residuals.csv");
  out.summary["results"] = {
      {"du_residual_finest", tagged(du_res.back(), "verify_closed")},
      {"delta_residual_finest", tagged(delta_res.back(), "verify_coclosed")},
      {"du_slope", tagged(loglog_slope(hs, du_res), "loglog_slope")},
      {"delta_slope", tagged(loglog_slope(hs, delta_res), "loglog_slope")},
      {"negative_control_residual", tagged(control, "verify_coclosed")},
  };
  return out;
}

/* ---- evolution ---- */

void probes_to_csv(const std::string& path, const char* field,
                   const ProbeSeries& ps) {
  std::vector<std::string> header = {"t"};
  for (double rs : ps.probe_rstar)
    header.push_back(std::string(field) + "@" + g17(rs));
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < ps.t.size(); ++i) {
    std::vector<std::string> cells = {g17(ps.t[i])};
    for (const auto& col : ps.value) cells.push_back(g17(col[i]));
    rows.push_back(cells);
  }
  write_csv(path, header, rows);
}

json fit_tail_json(const ProbeSeries& ps, double t_lo) {
  json arr = json::array();
  for (size_t j = 0; j < ps.value.size(); ++j) {
    std::vector<double> t, y;
    for (size_t i = 0; i < ps.t.size(); ++i) {
      if (ps.t[i] < t_lo) continue;
      t.push_back(ps.t[i]);
      y.push_back(ps.value[j][i]);
    }
    const DecayFit f = fit_decay(t, y);
    arr.push_back(json{{"probe_rstar", ps.probe_rstar[j]},
                       {"c0", f.c0},
                       {"kappa", f.kappa},
                       {"omega", f.omega},
                       {"amplitude", f.amplitude},
                       {"rms_residual", f.rms_residual},
                       {"accepted", f.accepted},
                       {"operation", "fit_decay"}});
  }
  return arr;
}

TaskOutput task_evolve(const std::string& dir, const Spacetime& st,
                       const json& task, const json& numerics) {
  if (st.kind != "sds") bad("task evolve requires spacetime kind sds");
  const std::string family = str_field(task, "family", "task", "scalar");
  const double t_max = num_field(task, "t_max", "task", 60.0);
  const double center = num_field(task, "pulse_center", "task", 0.0);
  const double width = num_field(task, "pulse_width", "task", 2.0);
  const double amp = num_field(task, "pulse_amplitude", "task", 1.0);
  if (!(t_max > 0)) bad("task evolve: t_max must be positive");

  EvolveOptions opt;
  opt.L = num_field(numerics, "L", "numerics", 40.0);
  opt.npts = int_field(numerics, "npts", "numerics", 2049);
  opt.cfl = num_field(numerics, "cfl", "numerics", 0.8);
  const double t_fit = num_field(task, "fit_start", "task", 0.35 * t_max);

  TaskOutput out;
  if (family == "scalar") {
    const int ell = int_field(task, "ell", "task", 0);
    TortoiseGrid g = tortoise_grid(st.sds, opt.L, opt.npts);
    ScalarInit init;
    init.u0 = gaussian_pulse(g, center, width, amp);
    init.v0.assign(g.size(), 0.0);
    const ScalarEvolution ev = evolve_scalar(st.sds, ell, init, t_max, opt);
    probes_to_csv(dir + "/evolve_scalar.csv", "u", ev.u);
    out.files.push_back("evolve_scalar.csv");
    out.summary["results"] = {
        {"fits", fit_tail_json(ev.u, t_fit)},
        {"energy_final",
         tagged(ev.energy.back(), "evolve_scalar")},
    };
  } else if (family == "oneform") {
    TortoiseGrid g = tortoise_grid(st.sds, opt.L, opt.npts);
    OneFormInit init;
    init.f1 = gaussian_pulse(g, center, width, amp);
    init.f2.assign(g.size(), 0.0);
    init.v1.assign(g.size(), 0.0);
    init.v2.assign(g.size(), 0.0);
    const OneFormEvolution ev = evolve_oneform(st.sds, init, t_max, opt);
    probes_to_csv(dir + "/evolve_oneform_f1.csv", "f1", ev.f1);
    probes_to_csv(dir + "/evolve_oneform_f2.csv", "f2", ev.f2);
    out.files.push_back("evolve_oneform_f1.csv");
    out.files.push_back("evolve_oneform_f2.csv");
    const OneFormProjection pr =
        project_oneform(st.sds, ev.grid, ev.f1_final, ev.f2_final);
    out.summary["results"] = {
        {"fits_f1", fit_tail_json(ev.f1, t_fit)},
        {"c_plus", tagged(pr.c_plus, "project_oneform")},
        {"c_minus", tagged(pr.c_minus, "project_oneform")},
        {"projection_residual", tagged(pr.rel_residual, "project_oneform")},
    };
  } else if (family == "twoform") {
    TortoiseGrid g = tortoise_grid(st.sds, opt.L, opt.npts);
    TwoFormInit init;
    init.x = gaussian_pulse(g, center, width, amp);
    init.w.assign(g.size(), 0.0);
    init.vx.assign(g.size(), 0.0);
    init.vw.assign(g.size(), 0.0);
    const TwoFormEvolution ev = evolve_twoform(st.sds, init, t_max, opt);
    probes_to_csv(dir + "/evolve_twoform_x.csv", "x", ev.x);
    probes_to_csv(dir + "/evolve_twoform_w.csv", "w", ev.w);
    out.files.push_back("evolve_twoform_x.csv");
    out.files.push_back("evolve_twoform_w.csv");
    out.summary["results"] = {
        {"fits_x", fit_tail_json(ev.x, t_fit)},
    };
  } else {
    bad("task evolve: family must be scalar, oneform, or twoform");
  }
  return out;
}

/* ---- mode scan ---- */

TaskOutput task_mode_scan(const std::string& dir, const Spacetime& st,
                          const json& task) {
  if (st.kind != "sds") bad("task mode-scan requires spacetime kind sds");
  const std::string sector_name = str_field(task, "sector", "task", "scalar");
  ScanSector sector;
  if (sector_name == "scalar")
    sector = ScanSector::Scalar;
  else if (sector_name == "omega")
    sector = ScanSector::OmegaProfile;
  else if (sector_name == "dtdr")
    sector = ScanSector::DtDrProfile;
  else
    bad("task mode-scan: sector must be scalar, omega, or dtdr");

  ScanOptions opt;
  opt.ell = int_field(task, "ell", "task", 0);
  opt.series_cap = int_field(task, "series_cap", "task", 200);
  SigmaBox box;
  box.re_min = num_field(task, "re_min", "task", -2.0);
  box.re_max = num_field(task, "re_max", "task", 2.0);
  box.re_step = num_field(task, "re_step", "task", 0.02);
  box.im_min = num_field(task, "im_min", "task", 0.02);
  box.im_max = num_field(task, "im_max", "task", 1.0);
  box.im_step = num_field(task, "im_step", "task", 0.02);

  const ModeScanResult scan = mode_scan(st.sds, sector, box, opt);

  std::vector<std::vector<std::string>> rows;
  rows.reserve(scan.samples.size());
  for (const ConnectionResult& s : scan.samples)
    rows.push_back(num_row({s.sigma.real(), s.sigma.imag(), s.det_norm,
                            std::arg(s.w_raw)}));
  write_csv(dir + "/mode_scan.csv",
            {"re_sigma", "im_sigma", "abs_det", "arg_det"}, rows);

  TaskOutput out;
  out.files.push_back("mode_scan.csv");
  json zeros = json::array();
  for (const Cplx& z : scan.zeros)
    zeros.push_back(json{{"re", z.real()}, {"im", z.imag()}});
  out.summary["results"] = {
      {"median_det", tagged(scan.median_det, "mode_scan")},
      {"zero_count", tagged((double)scan.zeros.size(), "mode_scan")},
      {"zeros", zeros},
      {"max_cr_residual", tagged(scan.max_cr_residual, "mode_scan")},
      {"collisions_skipped",
       tagged((double)scan.collisions_skipped, "mode_scan")},
  };
  return out;
}

}  // namespace

RunResult run_config(const std::string& config_path,
                     const std::string& out_override,
                     std::optional<long> seed_override) {
  const auto t_start = std::chrono::steady_clock::now();

  std::ifstream is(config_path);
  if (!is) bad("cannot open config file: " + config_path);
  json cfg;
  try {
    cfg = json::parse(is);
  } catch (const json::exception& e) {
    bad(std::string("config parse error: ") + e.what());
  }
  if (!cfg.is_object()) bad("config: top level must be a JSON object");

  const Spacetime st = parse_spacetime(cfg);
  const json& task = need(cfg, "task", "config");
  if (!task.is_object()) bad("config: 'task' must be a single object");
  const std::string name = str_field(task, "name", "task");
  const json numerics = cfg.contains("numerics") ? cfg.at("numerics")
                                                 : json::object();
  if (!numerics.is_object()) bad("config: 'numerics' must be an object");

  long seed = 12345;
  if (cfg.contains("seed")) {
    if (!cfg.at("seed").is_number_integer())
      bad("config: 'seed' must be an integer");
    seed = cfg.at("seed").get<long>();
  }
  if (seed_override) seed = *seed_override;

  std::string dir;
  if (!out_override.empty()) {
    dir = out_override;
  } else if (const char* env = std::getenv("SDSFORM_OUT");
             env && *env) {
    dir = env;
  } else if (cfg.contains("output") && cfg.at("output").is_object() &&
             cfg.at("output").contains("directory")) {
    dir = str_field(cfg.at("output"), "directory", "output");
  } else {
    dir = "./out";
  }

  TaskOutput result;
  if (name == "geometry") result = task_geometry(dir, st);
  else if (name == "trapping") result = task_trapping(dir, st, seed, task);
  else if (name == "zero-modes") result = task_zero_modes(dir, st, numerics);
  else if (name == "cohomology") result = task_cohomology(dir, st);
  else if (name == "ds-table") result = task_ds_table(dir, st);
  else if (name == "kds-verify")
    result = task_kds_verify(dir, st, task, numerics);
  else if (name == "evolve") result = task_evolve(dir, st, task, numerics);
  else if (name == "mode-scan") result = task_mode_scan(dir, st, task);
  else
    bad("task: unknown task name '" + name + "'");

  result.summary["task"] = name;
  result.summary["spacetime"] = cfg.at("spacetime");
  write_text_atomic(dir + "/summary.json", result.summary.dump(2) + "\n");
  result.files.push_back("summary.json");

  const auto t_end = std::chrono::steady_clock::now();
  const double wall =
      std::chrono::duration<double>(t_end - t_start).count();

  json manifest = {
      {"schema", "1"},
      {"config_path", config_path},
      {"config", cfg},
      {"library_version", kLibraryVersion},
      {"seed", seed},
      {"wall_time_seconds", wall},
      {"outputs", result.files},
  };
  write_text_atomic(dir + "/manifest.json", manifest.dump(2) + "\n");
  result.files.push_back("manifest.json");

  RunResult rr;
  rr.out_dir = dir;
  rr.files = result.files;
  return rr;
}

}  // namespace sdsform
