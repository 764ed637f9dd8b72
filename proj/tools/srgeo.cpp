#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srgeo/errors.hpp"
#include "srgeo/exp_map.hpp"
#include "srgeo/periodic.hpp"
#include "srgeo/serialize.hpp"
#include "srgeo/sphere.hpp"
#include "srgeo/symmetry.hpp"
#include "srgeo/verifier.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace srgeo;

constexpr int kExitInvalidInput = 2;
constexpr int kExitInvariant = 3;
constexpr const char* kToleranceEnv = "SRGEO_TOLERANCE";

struct CovectorOptions {
  std::string p0;
  std::string region;
  double k = 0.5;
  double theta0 = 0.0;
  int s1 = 1;
  int s2 = 1;
  int parity = 0;
};

struct TimeOptions {
  std::string t = "0";
  double t_end = -1.0;
  int steps = 100;
};

struct RunConfig {
  double a = 0.5;
  CovectorOptions cov;
  TimeOptions time;
  std::string format = "json";
  std::uint64_t seed = 1;
};

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw DomainError(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
    if (used != item.size()) {
      throw DomainError(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

Tolerances tolerances_from_env() {
  Tolerances tol;
  if (const char* env = std::getenv(kToleranceEnv)) {
    const auto v = parse_list(env, kToleranceEnv);
    if (v.size() != 1 || !(v[0] > 0.0)) {
      throw DomainError(std::string(kToleranceEnv) + " must be a single positive number");
    }
    tol.region = v[0];
  }
  return tol;
}

SRParams make_params(const RunConfig& cfg) { return SRParams(cfg.a, tolerances_from_env()); }

EllipticData elliptic_from_options(const CovectorOptions& c, const SRParams& params) {
  if (!c.p0.empty()) {
    const auto v = parse_list(c.p0, "--p0");
    if (v.size() != 3) {
      throw DomainError("--p0 expects three comma-separated numbers");
    }
    return to_elliptic(Covector{v[0], v[1], v[2]}, params);
  }
  if (c.region.empty()) {
    throw DomainError("give either --p0 or --region");
  }
  EllipticData ed;
  ed.region = parse_region(c.region);
  if (ed.region == Region::C1 || ed.region == Region::C2) {
    if (!(c.k > 0.0)) {
      throw DomainError("--k must be positive in C1 and C2");
    }
    ed.k = special::Modulus(c.k);
  }
  if (std::abs(c.s1) != 1 || std::abs(c.s2) != 1) {
    throw DomainError("--s1 and --s2 must be +1 or -1");
  }
  ed.theta0 = c.theta0;
  ed.s1 = c.s1;
  ed.s2 = c.s2;
  ed.parity = c.parity;
  return ed;
}

std::vector<double> time_grid(const TimeOptions& t) {
  std::vector<double> grid;
  if (t.t_end >= 0.0) {
    if (t.steps < 1) {
      throw DomainError("--steps must be at least 1");
    }
    for (int i = 0; i <= t.steps; ++i) {
      grid.push_back(t.t_end * i / t.steps);
    }
  } else {
    grid = parse_list(t.t, "--t");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || (i > 0 && grid[i] < grid[i - 1])) {
      throw DomainError("times must be non-negative and non-decreasing");
    }
  }
  return grid;
}

void check_sample(const GeodesicSample& s) {
  if (orthogonality_defect(s.R) > 1e-10) {
    throw InvariantViolation("rotation left SO(3) at t = " + format_number(s.t));
  }
  if (std::abs(s.q.norm() - 1.0) > 1e-12) {
    throw InvariantViolation("quaternion left S^3 at t = " + format_number(s.t));
  }
}

json meta_json(const RunMeta& m) {
  return json::parse(samples_to_json(m, {}, -1))["meta"];
}

void add_covector_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--a", cfg.a, "metric invariant a in (0, 1)")->required();
  cmd->add_option("--p0", cfg.cov.p0, "initial covector p1,p2,p3 with p1^2 + p2^2 = 1");
  cmd->add_option("--region", cfg.cov.region, "C1..C5, alternative to --p0");
  cmd->add_option("--k", cfg.cov.k, "elliptic modulus (C1, C2)");
  cmd->add_option("--theta0", cfg.cov.theta0, "pendulum phase");
  cmd->add_option("--s1", cfg.cov.s1, "sign s1");
  cmd->add_option("--s2", cfg.cov.s2, "sign s2");
  cmd->add_option("--parity", cfg.cov.parity, "equilibrium parity (C4, C5)");
}

void add_time_options(CLI::App* cmd, RunConfig& cfg, const std::string& default_t) {
  cfg.time.t = default_t;
  cmd->add_option("--t", cfg.time.t, "comma-separated times")->capture_default_str();
  cmd->add_option("--t-end", cfg.time.t_end, "uniform grid on [0, t-end]");
  cmd->add_option("--steps", cfg.time.steps, "intervals of the uniform grid");
}

int cmd_exp(const RunConfig& cfg) {
  const SRParams params = make_params(cfg);
  const Geodesic geo(elliptic_from_options(cfg.cov, params), params);
  const auto grid = time_grid(cfg.time);
  const auto samples = sample_geodesic(geo, grid);
  for (const auto& s : samples) {
    check_sample(s);
  }
  const RunMeta meta = make_meta(geo);
  std::cout << (cfg.format == "csv" ? samples_to_csv(meta, samples)
                                    : samples_to_json(meta, samples) + "\n");
  return 0;
}

json deviation_json(const Deviation& d, bool sphere) {
  json j;
  j["t"] = d.t;
  j["rotation"] = d.rotation;
  j["quaternion"] = d.quaternion;
  j["covector"] = d.covector;
  if (sphere) {
    j["sphere"] = d.sphere;
  }
  return j;
}

int cmd_verify(const RunConfig& cfg, double step, int random_draws, double threshold) {
  const SRParams params = make_params(cfg);
  IntegratorConfig icfg;
  icfg.step = step;
  icfg.validate();
  auto grid = time_grid(cfg.time);

  std::vector<Covector> draws;
  if (random_draws > 0) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> p3(-1.5, 1.5);
    for (int i = 0; i < random_draws; ++i) {
      const double psi = angle(rng);
      draws.push_back({std::cos(psi), -std::sin(psi), p3(rng)});
    }
  } else {
    draws.push_back(covector_at(elliptic_from_options(cfg.cov, params), params, 0.0));
  }

  json report;
  report["a"] = cfg.a;
  report["step"] = step;
  report["threshold"] = threshold;
  report["runs"] = json::array();
  double worst = 0.0;
  for (const Covector& p0 : draws) {
    const Geodesic geo(p0, params);
    json run;
    run["meta"] = meta_json(make_meta(geo));
    run["p0"] = {p0.p1, p0.p2, p0.p3};
    run["deviations"] = json::array();
    for (const auto& d : compare_with_oracle(p0, params, grid, icfg)) {
      worst = std::max({worst, d.rotation, d.quaternion, d.covector});
      run["deviations"].push_back(deviation_json(d, false));
    }
    report["runs"].push_back(std::move(run));
  }
  report["max_deviation"] = worst;
  report["pass"] = worst <= threshold;
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_periodic(const RunConfig& cfg, int max_n, int max_m, const std::string& region) {
  const SRParams params = make_params(cfg);
  std::optional<Region> only;
  if (!region.empty()) {
    only = parse_region(region);
  }
  const auto rows = enumerate_periodic(params, max_n, max_m, only);
  json out;
  out["a"] = cfg.a;
  out["theta0"] = cfg.cov.theta0;
  out["rows"] = json::array();
  std::ostringstream csv;
  csv << "region,n,m,k,T,total_time,contractible,residual,closure_error,lift_sign\n";
  for (const auto& pg : rows) {
    const ClosureReport rep = verify_closure(pg, pg.elliptic(cfg.cov.theta0), params);
    json r;
    r["region"] = std::string(to_string(pg.spec.region));
    r["n"] = pg.spec.n;
    r["m"] = pg.spec.m;
    r["k"] = pg.k.k();
    r["T"] = pg.T;
    r["total_time"] = pg.total_time;
    r["contractible"] = pg.contractible;
    r["residual"] = pg.residual;
    r["closure_error"] = rep.closure_error;
    r["lift_sign"] = rep.lift_sign;
    out["rows"].push_back(std::move(r));
    csv << to_string(pg.spec.region) << ',' << pg.spec.n << ',' << pg.spec.m << ','
        << format_number(pg.k.k()) << ',' << format_number(pg.T) << ','
        << format_number(pg.total_time) << ',' << (pg.contractible ? 1 : 0) << ','
        << format_number(pg.residual) << ',' << format_number(rep.closure_error) << ','
        << rep.lift_sign << '\n';
  }
  std::cout << (cfg.format == "csv" ? csv.str() : out.dump(2) + "\n");
  return 0;
}

int cmd_maxwell(const RunConfig& cfg, double t_max) {
  const SRParams params = make_params(cfg);
  const EllipticData ed = elliptic_from_options(cfg.cov, params);
  const Covector p0 = covector_at(ed, params, 0.0);
  const auto ev = first_maxwell_time(p0, params, t_max);
  json out;
  out["meta"] = meta_json(make_meta(Geodesic(ed, params)));
  out["t_max"] = t_max;
  if (ev) {
    out["event"] = {{"time", ev->time},
                    {"condition", ev->condition},
                    {"component", "q" + std::to_string(ev->condition - 1)},
                    {"symmetry", ev->symmetry}};
  } else {
    out["event"] = nullptr;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct SphereOptions {
  std::string gamma0 = "1,0,0";
  std::optional<double> psi;
  std::optional<double> p3;
  int branch = 0;
};

int cmd_sphere(const RunConfig& cfg, const SphereOptions& so) {
  const SRParams params = make_params(cfg);
  const auto g = parse_list(so.gamma0, "--gamma0");
  if (g.size() != 3) {
    throw DomainError("--gamma0 expects three comma-separated numbers");
  }
  const Vec3 gv = Vec3(g[0], g[1], g[2]);
  if (!(gv.norm() > 0.0)) {
    throw DomainError("--gamma0 must be nonzero");
  }
  const SpherePoint gamma0 = SpherePoint::from_vector(gv.normalized());
  Covector p0;
  const TransversalFamily fam = transversal_family(gamma0, params);
  if (so.psi && fam.chart == TransversalFamily::Chart::Psi) {
    p0 = fam.at(*so.psi);
  } else if (so.p3 && fam.chart == TransversalFamily::Chart::P3) {
    p0 = fam.at(*so.p3, so.branch);
  } else if (so.psi || so.p3) {
    throw DomainError(fam.chart == TransversalFamily::Chart::Psi
                          ? "gamma0 is off the equator: parameterise with --psi"
                          : "gamma0 is on the equator: parameterise with --p3 and --branch");
  } else {
    p0 = covector_at(elliptic_from_options(cfg.cov, params), params, 0.0);
  }
  const ARGeodesic ar(gamma0, p0, params);
  const EllipticData& ed = ar.elliptic();

  json out;
  out["meta"] = meta_json(make_meta(ar.geodesic()));
  out["gamma0"] = {gamma0.x, gamma0.y, gamma0.z};
  out["p0"] = {p0.p1, p0.p2, p0.p3};
  json cut;
  cut["singular_start"] = singular_set(gamma0);
  if (singular_set(gamma0)) {
    cut["first_singular_return"] = first_singular_return(ar, params);
  }
  cut["cut_bound_AR"] = cut_bound_AR(ed, params);
  cut["cut_bound_SR"] = cut_bound_SR(ed, params);
  out["cut"] = cut;
  out["samples"] = json::array();
  std::ostringstream csv;
  csv << "t,x,y,z,p1,p2,p3\n";
  for (double t : time_grid(cfg.time)) {
    const SpherePoint pt = ar.at(t);
    if (std::abs(pt.norm() - 1.0) > 1e-12) {
      throw InvariantViolation("projected point left the unit sphere at t = " + format_number(t));
    }
    const Covector p = ar.geodesic().covector(t);
    out["samples"].push_back({{"t", t}, {"gamma", {pt.x, pt.y, pt.z}}, {"p", {p.p1, p.p2, p.p3}}});
    csv << format_number(t) << ',' << format_number(pt.x) << ',' << format_number(pt.y) << ','
        << format_number(pt.z) << ',' << format_number(p.p1) << ',' << format_number(p.p2) << ','
        << format_number(p.p3) << '\n';
  }
  std::cout << (cfg.format == "csv" ? csv.str() : out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sub-Riemannian geodesics on SO(3) and their projections to S^2"};
  app.require_subcommand(1);

  RunConfig cfg;
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  auto* exp_cmd = app.add_subcommand("exp", "sample the exponential map");
  add_covector_options(exp_cmd, cfg);
  add_time_options(exp_cmd, cfg, "0");
  add_format(exp_cmd);

  double step = 1e-4;
  int random_draws = 0;
  double threshold = 1e-8;
  auto* verify_cmd = app.add_subcommand("verify", "compare closed forms with RK4");
  add_covector_options(verify_cmd, cfg);
  verify_cmd->add_option("--t", cfg.time.t, "comparison times")->capture_default_str();
  verify_cmd->add_option("--step", step, "RK4 step")->capture_default_str();
  verify_cmd->add_option("--random", random_draws, "number of random covectors instead of one");
  verify_cmd->add_option("--seed", cfg.seed, "seed for --random")->capture_default_str();
  verify_cmd->add_option("--threshold", threshold, "pass threshold")->capture_default_str();

  int max_n = 5, max_m = 5;
  std::string only_region;
  auto* periodic_cmd = app.add_subcommand("periodic", "enumerate periodic geodesics");
  periodic_cmd->add_option("--a", cfg.a, "metric invariant a in (0, 1)")->required();
  periodic_cmd->add_option("--max-n", max_n)->capture_default_str();
  periodic_cmd->add_option("--max-m", max_m)->capture_default_str();
  periodic_cmd->add_option("--region", only_region, "C1 or C2 only");
  periodic_cmd->add_option("--theta0", cfg.cov.theta0, "phase used for the closure check");
  add_format(periodic_cmd);

  double t_max = 20.0;
  auto* maxwell_cmd = app.add_subcommand("maxwell", "first Maxwell time");
  add_covector_options(maxwell_cmd, cfg);
  maxwell_cmd->add_option("--t-max", t_max)->capture_default_str();

  SphereOptions so;
  auto* sphere_cmd = app.add_subcommand("sphere", "project to S^2 and report cut data");
  add_covector_options(sphere_cmd, cfg);
  add_time_options(sphere_cmd, cfg, "0");
  sphere_cmd->add_option("--gamma0", so.gamma0, "initial point x,y,z")->capture_default_str();
  sphere_cmd->add_option("--psi", so.psi, "transversal covector angle (gamma0 off the equator)");
  sphere_cmd->add_option("--p3", so.p3, "transversal p3 (gamma0 on the equator)");
  sphere_cmd->add_option("--branch", so.branch, "0 or 1, equator chart branch");
  add_format(sphere_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (exp_cmd->parsed()) {
      if (cfg.time.t_end < 0.0 && exp_cmd->count("--t") == 0) {
        cfg.time.t = "0";
      }
      return cmd_exp(cfg);
    }
    if (verify_cmd->parsed()) {
      if (verify_cmd->count("--t") == 0) {
        cfg.time.t = "10";
      }
      return cmd_verify(cfg, step, random_draws, threshold);
    }
    if (periodic_cmd->parsed()) {
      return cmd_periodic(cfg, max_n, max_m, only_region);
    }
    if (maxwell_cmd->parsed()) {
      return cmd_maxwell(cfg, t_max);
    }
    if (sphere_cmd->parsed()) {
      return cmd_sphere(cfg, so);
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
