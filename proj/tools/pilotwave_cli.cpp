// Command-line front end: oscillator parameters, forward/reverse derivations,
// property verification, figure grids, trajectories, and dimension checks.

#include "pilotwave/gridio.hpp"
#include "pilotwave/pipeline.hpp"
#include "pilotwave/trajectories.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace pw = pilotwave;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  double energy_ev = 1.0;
  std::string mass = "electron";
  std::string time = "period";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--energy-ev", opts.energy_ev,
                  "Oscillator energy in electron volts")
      ->capture_default_str();
  cmd->add_option("--mass", opts.mass, "Particle mass: 'electron' or a value in kg")
      ->capture_default_str();
}

void add_time(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--time", opts.time,
                  "Evaluation time: 'period' (pi*hbar/E) or a value in seconds")
      ->capture_default_str();
}

double parse_positive(const std::string& text, const char* what) {
  double value = 0;
  try {
    std::size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + " '" + text +
                                "' is not a number");
  }
  if (!(value > 0.0))
    throw std::invalid_argument(std::string(what) + " must be positive");
  return value;
}

pw::OscillatorParams resolve_params(const CommonOptions& opts) {
  double mass_kg = pw::constants::electron_mass;
  if (opts.mass != "electron") mass_kg = parse_positive(opts.mass, "mass");
  return pw::params_from_energy_ev(opts.energy_ev, mass_kg);
}

double resolve_time(const CommonOptions& opts, const pw::OscillatorParams& p) {
  if (opts.time == "period") return p.period;
  return parse_positive(opts.time, "time");
}

pw::CatalogId parse_id_or_throw(const std::string& name) {
  const auto id = pw::parse_catalog_id(name);
  if (!id) throw std::invalid_argument("unknown catalog field '" + name + "'");
  return *id;
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json params_json(const pw::OscillatorParams& p) {
  return json{{"mass_kg", p.mass},
              {"energy_j", p.energy},
              {"omega_rad_per_s", p.omega},
              {"period_s", p.period},
              {"lambda_norm", p.lambda_norm},
              {"beta_per_m2", p.beta},
              {"quantum_n", p.quantum_n}};
}

int cmd_params(const CommonOptions& opts) {
  std::cout << params_json(resolve_params(opts)).dump(2) << "\n";
  return kExitOk;
}

int cmd_dims(const std::string& item) {
  std::cout << pw::to_string(pw::dim_of_catalog(parse_id_or_throw(item))) << "\n";
  return kExitOk;
}

// Compares the numerically derived counterpart against its closed form over
// the figure radius range.
int cmd_derive(const CommonOptions& opts, const std::string& field) {
  const pw::CatalogId id = parse_id_or_throw(field);
  if (!pw::is_scalar_field(id))
    throw std::invalid_argument("'" + field + "' is a velocity; use 'reverse'");
  const pw::OscillatorParams p = resolve_params(opts);
  const double t = resolve_time(opts, p);

  const pw::DerivationRecord rec = pw::forward_derive(pw::scalar_field(id, p), p);
  const pw::CatalogId partner = pw::generated_velocity(id);
  double max_err = 0;
  const pw::SampleSet samples = pw::default_sample_set(p);
  for (double r : samples.radii) {
    const pw::PolarVector got = rec.velocity.evaluate(r, 0.0, t);
    const pw::PolarVector want = pw::eval_velocity(partner, r, t, p);
    max_err = std::max(max_err, pw::relative_error(got.v_theta, want.v_theta));
  }

  json out{{"field", pw::catalog_name(id)},
           {"velocity", pw::catalog_name(partner)},
           {"dimension", pw::to_string(rec.dimension)},
           {"dimension_valid", rec.dimension_valid},
           {"max_rel_error_vs_closed_form", max_err},
           {"time_s", t}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_reverse(const CommonOptions& opts, const std::string& velocity) {
  const pw::CatalogId id = parse_id_or_throw(velocity);
  if (!pw::is_velocity_field(id))
    throw std::invalid_argument("'" + velocity + "' is a scalar field; use 'derive'");
  const pw::OscillatorParams p = resolve_params(opts);
  const double t = resolve_time(opts, p);

  const pw::ScalarFieldDescriptor phi =
      pw::reverse_derive(pw::velocity_field(id, p), p);
  const pw::CatalogId partner = pw::generating_scalar(id);
  double max_err = 0;
  const pw::SampleSet samples = pw::default_sample_set(p);
  for (double r : samples.radii)
    max_err = std::max(max_err, pw::relative_error(phi.evaluate(r, 0.0, t),
                                                   pw::eval_scalar(partner, r, t, p)));

  json out{{"velocity", pw::catalog_name(id)},
           {"scalar_field", pw::catalog_name(partner)},
           {"dimension", pw::to_string(phi.dimension)},
           {"max_rel_error_vs_closed_form", max_err},
           {"time_s", t}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const CommonOptions& opts, int resolution, int random_fields,
               bool inject_sign_flip) {
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  if (random_fields < 0) throw std::invalid_argument("random-fields must be >= 0");
  const pw::OscillatorParams p = resolve_params(opts);
  pw::VerifyOptions vopts;
  vopts.n_radii = resolution;
  vopts.random_fields = random_fields;
  vopts.inject_sign_flip = inject_sign_flip;
  const pw::PropertyReport report = pw::run_verification(p, vopts);
  for (const pw::PropertyCheck& c : report.checks)
    std::printf("%s  %s (max_rel_err=%.3e, tol=%.3e)\n",
                c.passed ? "PASS" : "FAIL", c.name.c_str(), c.max_rel_error,
                c.tolerance);
  std::printf("%zu/%zu properties passed\n",
              static_cast<std::size_t>(
                  std::count_if(report.checks.begin(), report.checks.end(),
                                [](const auto& c) { return c.passed; })),
              report.checks.size());
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_grid(const CommonOptions& opts, const std::string& field, bool all,
             const std::string& out, const std::string& out_dir,
             const std::string& format, double range_nm, int resolution) {
  const pw::OscillatorParams p = resolve_params(opts);
  pw::GridSpec spec;
  spec.half_width = range_nm * 1e-9;
  spec.resolution = resolution;
  spec.time = resolve_time(opts, p);
  const pw::GridFormat fmt =
      format == "json" ? pw::GridFormat::json : pw::GridFormat::csv;

  if (all) {
    const auto paths = pw::write_figure_grids(
        out_dir.empty() ? "." : out_dir, p, spec, fmt);
    for (const auto& path : paths) std::cout << path.string() << "\n";
    return kExitOk;
  }
  if (field.empty())
    throw std::invalid_argument("grid needs --field or --all");
  const pw::CatalogId id = parse_id_or_throw(field);
  const pw::FieldGrid grid = pw::is_scalar_field(id)
                                 ? pw::sample_scalar(id, spec, p)
                                 : pw::sample_velocity(id, spec, p);
  std::filesystem::path path = out;
  if (path.empty())
    path = pw::grid_filename(id, p.energy / pw::constants::electron_volt,
                             spec.resolution, fmt);
  pw::write_grid(grid, path, fmt);
  std::cout << path.string() << "\n";
  return kExitOk;
}

int cmd_trajectory(const CommonOptions& opts, const std::string& velocity,
                   double r0_nm, double theta0, const std::string& t_end_opt,
                   const std::string& dt_opt, const std::string& method,
                   const std::string& out, bool superluminal) {
  const pw::CatalogId id = parse_id_or_throw(velocity);
  if (!pw::is_velocity_field(id))
    throw std::invalid_argument("trajectory needs a velocity field");
  const pw::OscillatorParams p = resolve_params(opts);
  const double t0 = resolve_time(opts, p);

  if (superluminal) {
    const double radius = pw::superluminal_radius(id, t0, p);
    json j{{"velocity", pw::catalog_name(id)},
           {"time_s", t0},
           {"light_speed_mps", pw::constants::light_speed},
           {"superluminal_radius_m", radius}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  if (!(r0_nm > 0.0)) throw std::invalid_argument("r0 must be positive");
  pw::TrajectoryConfig cfg;
  cfg.t_start = t0;
  cfg.t_end = t_end_opt.empty() ? 10.0 * t0 : parse_positive(t_end_opt, "t-end");
  cfg.dt = dt_opt.empty() ? t0 / 1000.0 : parse_positive(dt_opt, "dt");
  if (method == "euler")
    cfg.method = pw::StepMethod::euler;
  else if (method != "rk4")
    throw std::invalid_argument("method must be rk4 or euler");

  const pw::Trajectory path =
      pw::integrate(pw::velocity_field(id, p), {r0_nm * 1e-9, theta0}, cfg);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw std::runtime_error("cannot open '" + out + "' for writing");
    os = &file;
  }
  *os << "t_s,r_m,theta_rad,x_m,y_m,speed_mps\n";
  for (const pw::TrajectorySample& s : path.samples)
    *os << fmt17(s.t) << ',' << fmt17(s.r) << ',' << fmt17(s.theta) << ','
        << fmt17(s.r * std::cos(s.theta)) << ',' << fmt17(s.r * std::sin(s.theta))
        << ',' << fmt17(s.speed) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Divergence-free guidance fields for the 2D ground-state quantum "
      "harmonic oscillator: derive velocity fields from scalar fields and "
      "back, check dimensions and identities, export figure grids, and "
      "integrate particle trajectories."};
  app.require_subcommand(1);

  CommonOptions opts;

  auto* params = app.add_subcommand(
      "params",
      "Print oscillator parameters as JSON: omega = 2E/hbar, period = "
      "pi*hbar/E, beta = m*omega/(2*hbar), lambda = (m*omega/(pi*hbar))^(1/4)");
  add_common(params, opts);

  std::string dims_item;
  auto* dims = app.add_subcommand(
      "dims", "Print the (M, L, T) dimension of a catalog field, e.g. 'L^2 T^-1'");
  dims->add_option("--item", dims_item, "Catalog field name")->required();

  std::string derive_field;
  auto* derive = app.add_subcommand(
      "derive",
      "Forward pipeline: rotate the gradient of a scalar field into a "
      "divergence-free current, divide by the Born density, and report the "
      "velocity with its dimension verdict");
  derive->add_option("--field", derive_field, "Scalar field name")->required();
  add_common(derive, opts);
  add_time(derive, opts);

  std::string reverse_velocity;
  auto* reverse = app.add_subcommand(
      "reverse",
      "Reverse pipeline: multiply a velocity by the Born density and "
      "integrate the current over radius to recover the scalar field with "
      "phi(inf) = 0");
  reverse->add_option("--velocity", reverse_velocity, "Velocity field name")
      ->required();
  add_common(reverse, opts);
  add_time(reverse, opts);

  int verify_resolution = 201;
  int verify_random_fields = 100;
  bool verify_inject = false;
  auto* verify = app.add_subcommand(
      "verify",
      "Run the full property suite: divergence-free construction, linearity, "
      "continuity, dimension verdicts, catalog identities, and the "
      "reverse/forward round trip; exits 1 on any failure");
  add_common(verify, opts);
  verify->add_option("--resolution", verify_resolution,
                     "Radial sample count per check")
      ->capture_default_str();
  verify->add_option("--random-fields", verify_random_fields,
                     "Number of randomized smooth test fields")
      ->capture_default_str();
  verify->add_flag("--inject-sign-flip", verify_inject,
                   "Self-test: corrupt one identity to exercise the failure path");

  std::string grid_field, grid_out, grid_out_dir, grid_format = "csv";
  bool grid_all = false;
  double grid_range_nm = 1.0;
  int grid_resolution = 201;
  auto* grid = app.add_subcommand(
      "grid",
      "Sample a field on the +-range square and write CSV or JSON; --all "
      "emits the eight figure datasets (four scalar fields, four velocities)");
  grid->add_option("--field", grid_field, "Catalog field name");
  grid->add_flag("--all", grid_all, "Write all eight figure grids");
  grid->add_option("--out", grid_out, "Output file (single field)");
  grid->add_option("--out-dir", grid_out_dir, "Output directory for --all");
  grid->add_option("--format", grid_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  grid->add_option("--range-nm", grid_range_nm, "Window half-width in nm")
      ->capture_default_str();
  grid->add_option("--resolution", grid_resolution, "Samples per axis (odd)")
      ->capture_default_str();
  add_common(grid, opts);
  add_time(grid, opts);

  std::string traj_velocity, traj_t_end, traj_dt, traj_out;
  std::string traj_method = "rk4";
  double traj_r0_nm = 0.0;
  double traj_theta0 = 0.0;
  bool traj_superluminal = false;
  auto* traj = app.add_subcommand(
      "trajectory",
      "Integrate dr/dt = v_r, dtheta/dt = v_theta/r from (r0, theta0) and "
      "write CSV samples; --superluminal instead reports the radius where "
      "the field magnitude reaches the speed of light");
  traj->add_option("--velocity", traj_velocity, "Velocity field name")->required();
  traj->add_option("--r0-nm", traj_r0_nm, "Start radius in nm");
  traj->add_option("--theta0-rad", traj_theta0, "Start angle in rad")
      ->capture_default_str();
  traj->add_option("--t-end", traj_t_end, "End time in seconds (default 10x start)");
  traj->add_option("--dt", traj_dt, "Step in seconds (default start/1000)");
  traj->add_option("--method", traj_method, "rk4 or euler")
      ->check(CLI::IsMember({"rk4", "euler"}))
      ->capture_default_str();
  traj->add_option("--out", traj_out, "Output CSV path (default stdout)");
  traj->add_flag("--superluminal", traj_superluminal,
                 "Report the light-speed crossing radius");
  add_common(traj, opts);
  add_time(traj, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (params->parsed()) return cmd_params(opts);
    if (dims->parsed()) return cmd_dims(dims_item);
    if (derive->parsed()) return cmd_derive(opts, derive_field);
    if (reverse->parsed()) return cmd_reverse(opts, reverse_velocity);
    if (verify->parsed())
      return cmd_verify(opts, verify_resolution, verify_random_fields,
                        verify_inject);
    if (grid->parsed())
      return cmd_grid(opts, grid_field, grid_all, grid_out, grid_out_dir,
                      grid_format, grid_range_nm, grid_resolution);
    if (traj->parsed())
      return cmd_trajectory(opts, traj_velocity, traj_r0_nm, traj_theta0,
                            traj_t_end, traj_dt, traj_method, traj_out,
                            traj_superluminal);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
