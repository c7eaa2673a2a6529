#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "aistress/credit.hpp"
#include "aistress/csv.hpp"
#include "aistress/dynamics.hpp"
#include "aistress/indicators.hpp"
#include "aistress/intermediation.hpp"
#include "aistress/manifest.hpp"
#include "aistress/monetary.hpp"
#include "aistress/parallel.hpp"
#include "aistress/params.hpp"
#include "aistress/policy.hpp"
#include "aistress/stochastics.hpp"
#include "aistress/svg.hpp"

namespace fs = std::filesystem;

namespace aistress::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct Common {
  std::string config;
  std::string out = "out";
  bool svg = false;
};

void add_common(CLI::App* cmd, Common& c, bool svg) {
  cmd->add_option("--config", c.config, "Calibration/scenario file (key = value)");
  cmd->add_option("--out", c.out, "Output directory")->capture_default_str();
  if (svg) cmd->add_flag("--svg", c.svg, "Also write an SVG chart");
}

Config load(const Common& c) {
  return c.config.empty() ? Config{default_calibration(), {}} : load_config(c.config);
}

std::string config_hash(const Config& cfg) { return hex64(fnv1a64(serialize(cfg))); }

// Files written by one command, relative to its output directory.
class Sink {
 public:
  explicit Sink(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create output directory '" + dir_.string() + "': " + ec.message());
  }
  void put(const std::string& name, const std::string& text) {
    write_file(dir_ / name, text);
    names_.push_back(name);
  }
  const std::vector<std::string>& names() const { return names_; }
  const fs::path& dir() const { return dir_; }

 private:
  fs::path dir_;
  std::vector<std::string> names_;
};

void finish(Sink& sink, const std::string& manifest_name, const std::string& cmdline,
            const Config& cfg, std::optional<std::uint64_t> seed, Clock::time_point start) {
  RunManifest m;
  m.command_line = cmdline;
  m.config_hash = config_hash(cfg);
  m.seed = seed;
  m.outputs = sink.names();
  m.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  write_file(sink.dir() / manifest_name, manifest_text(m));
}

// Built-in scenarios; a config block with the same name takes precedence.
std::vector<Scenario> builtin_scenarios() {
  std::vector<Scenario> v;
  for (auto [name, g] : {std::pair{"baseline", 0.05}, {"rapid", 0.20}, {"extreme", 0.40}}) {
    Scenario s;
    s.name = name;
    s.g_A_override = g;
    v.push_back(s);
  }
  return v;
}

std::vector<Scenario> available_scenarios(const Config& cfg) {
  std::vector<Scenario> all = cfg.scenarios;
  for (const auto& b : builtin_scenarios())
    if (!cfg.find(b.name)) all.push_back(b);
  return all;
}

Scenario find_scenario(const Config& cfg, const std::string& name) {
  const auto all = available_scenarios(cfg);
  std::string names;
  for (const auto& s : all) {
    if (s.name == name) return s;
    names += (names.empty() ? "" : ", ") + s.name;
  }
  throw ConfigError("unknown scenario '" + name + "'; available: " + names);
}

void check_scenario(const Scenario& s) {
  auto vs = validate(s);
  if (!vs.empty()) {
    std::string msg = "invalid scenario '" + s.name + "':";
    for (const auto& v : vs) msg += " " + v.field + " (" + v.message + ")";
    throw ConfigError(msg);
  }
}

std::vector<double> ts(const Trajectory& t) {
  std::vector<double> v;
  for (const auto& p : t.points) v.push_back(p.t);
  return v;
}

template <class F>
std::vector<double> col(const Trajectory& t, F f) {
  std::vector<double> v;
  for (const auto& p : t.points) v.push_back(f(p));
  return v;
}

ChartLine line_of(const std::string& label, const Trajectory& t, double TrajectoryPoint::*m) {
  return {label, ts(t), col(t, [m](const TrajectoryPoint& p) { return p.*m; })};
}

std::string trajectory_panels(const std::string& title,
                              const std::vector<std::pair<std::string, Trajectory>>& runs) {
  LineChart a{title + ": labor share", "years", "labor share", {}};
  LineChart b{title + ": monetary velocity", "years", "velocity", {}};
  LineChart d{title + ": consumption-to-GDP ratio", "years", "C/Y", {}};
  for (const auto& [label, t] : runs) {
    a.lines.push_back(line_of(label, t, &TrajectoryPoint::s_L));
    b.lines.push_back(line_of(label, t, &TrajectoryPoint::velocity));
    d.lines.push_back(line_of(label, t, &TrajectoryPoint::consumption_ratio));
  }
  return render_svg_panels({a, b, d});
}

struct PolicyCase {
  const char* label;
  PolicySpec policy;
};

const std::vector<PolicyCase>& policy_cases() {
  static const std::vector<PolicyCase> cases = {
      {"no policy", {0.0, 0.0, 0.0}},
      {"slow-small: lag 3 / tau 0.03", {0.03, 3.0, 0.0}},
      {"medium: lag 1.5 / tau 0.05", {0.05, 1.5, 0.0}},
      {"fast-large: lag 0.5 / tau 0.10", {0.10, 0.5, 0.0}},
  };
  return cases;
}

std::string policy_figure(const std::vector<std::pair<std::string, Trajectory>>& runs,
                          const std::vector<SweepCell>& cells) {
  LineChart a{"Labor share under policy scenarios", "years", "labor share", {}};
  for (const auto& [label, t] : runs) a.lines.push_back(line_of(label, t, &TrajectoryPoint::s_L));
  LineChart b{"Crisis depth vs policy lag", "lag (years)", "crisis depth", {}};
  std::vector<double> taus;
  for (const auto& c : cells)
    if (std::find(taus.begin(), taus.end(), c.tau) == taus.end()) taus.push_back(c.tau);
  for (double tau : taus) {
    ChartLine l{"tau = " + fmt_sig(tau, 6), {}, {}};
    for (const auto& c : cells)
      if (c.tau == tau) {
        l.x.push_back(c.lag);
        l.y.push_back(c.depth);
      }
    b.lines.push_back(std::move(l));
  }
  return render_svg_panels({a, b});
}

std::string decomposition_csv(const QuintileProfile& p, const ConsumptionShock& s) {
  std::string out = "quintile,consumption_share,mpc,exposure,contribution_pp\n";
  for (int i = 0; i < 5; ++i)
    out += "Q" + std::to_string(i + 1) + "," + fmt_sig(p.q[i].consumption_share) + "," +
           fmt_sig(p.q[i].mpc) + "," + fmt_sig(p.q[i].exposure) + "," + fmt_sig(s.per_quintile_pp[i]) +
           "\n";
  out += "total,,,," + fmt_sig(s.total_pp) + "\n";
  return out;
}

std::string bands_csv(const Config& cfg, const std::vector<Scenario>& scenarios) {
  std::string out = "scenario,g_A,cumulative_consumption_decline_pct,terminal_shortfall_pct,s_L_final,collapse_time\n";
  for (const auto& s : scenarios) {
    const Calibration c = effective_calibration(cfg.calibration, s);
    const Trajectory t = simulate_path(s, cfg.calibration);
    out += s.name + "," + fmt_sig(c.g_A) + "," + fmt_sig(100.0 * cumulative_consumption_decline(t, c)) +
           "," + fmt_sig(100.0 * terminal_demand_shortfall(t, c)) + "," + fmt_sig(t.final_labor_share()) +
           "," + (t.collapse_time ? fmt_sig(*t.collapse_time) : std::string()) + "\n";
  }
  return out;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "aistress";
  for (const auto& a : args) s += " " + a;
  return s;
}

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"AI displacement stress-test engine", "aistress"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kEngineVersion);
  const std::string cmdline = join_args(args);
  const auto start = Clock::now();

  // simulate
  Common sim_c;
  std::string sim_name;
  std::optional<double> sim_dt, sim_horizon;
  auto* sim = app.add_subcommand("simulate", "Integrate one scenario and write its trajectory");
  add_common(sim, sim_c, true);
  sim->add_option("--scenario", sim_name, "Scenario name")->required();
  sim->add_option("--dt", sim_dt, "Integration step in years (at most 0.05)");
  sim->add_option("--horizon", sim_horizon, "Horizon in years");

  // sweep
  Common sw_c;
  std::vector<double> sw_lags{0, 0.5, 1, 1.5, 2, 2.5, 3, 4, 5, 6, 7, 8};
  std::vector<double> sw_taus{0.03, 0.05, 0.10};
  double sw_g = 0.20, sw_horizon = 10, sw_dt = 0.01;
  unsigned sw_jobs = default_jobs();
  auto* sw = app.add_subcommand("sweep", "Crisis depth over a policy lag x transfer grid");
  add_common(sw, sw_c, true);
  sw->add_option("--lags", sw_lags, "Policy lags in years")->delimiter(',')->capture_default_str();
  sw->add_option("--taus", sw_taus, "Transfer magnitudes")->delimiter(',')->capture_default_str();
  sw->add_option("--g-A", sw_g, "AI capability growth rate")->capture_default_str();
  sw->add_option("--horizon", sw_horizon, "Horizon in years")->capture_default_str();
  sw->add_option("--dt", sw_dt, "Integration step in years (at most 0.05)")->capture_default_str();
  sw->add_option("--jobs", sw_jobs, "Worker threads")->check(CLI::PositiveNumber);

  // montecarlo
  Common mc_c;
  std::size_t mc_n = 2000;
  std::uint64_t mc_seed = 42;
  double mc_threshold = 0.30, mc_horizon = 10, mc_dt = 0.01;
  int mc_bins = 40;
  unsigned mc_jobs = default_jobs();
  auto* mc = app.add_subcommand("montecarlo", "Demand shortfall distribution over sampled calibrations");
  add_common(mc, mc_c, false);
  mc->add_option("--n", mc_n, "Number of draws")->capture_default_str();
  mc->add_option("--seed", mc_seed, "Random seed")->capture_default_str();
  mc->add_option("--threshold", mc_threshold, "Tail threshold on the shortfall")->capture_default_str();
  mc->add_option("--horizon", mc_horizon, "Horizon in years")->capture_default_str();
  mc->add_option("--dt", mc_dt, "Integration step in years (at most 0.05)")->capture_default_str();
  mc->add_option("--bins", mc_bins, "Histogram bins")->check(CLI::PositiveNumber)->capture_default_str();
  mc->add_option("--jobs", mc_jobs, "Worker threads")->check(CLI::PositiveNumber);

  // credit
  Common cr_c;
  double cr_dscr = 1.5;
  std::optional<double> cr_sigma;
  std::vector<double> cr_deltas{0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50};
  auto* cr = app.add_subcommand("credit", "Default probability under permanent income shocks");
  add_common(cr, cr_c, false);
  cr->add_option("--dscr", cr_dscr, "Pre-shock debt service coverage ratio")->capture_default_str();
  cr->add_option("--sigma", cr_sigma, "Income volatility (default: sigma_r from the config)");
  cr->add_option("--deltas", cr_deltas, "Income shocks")->delimiter(',');

  // intermediation
  Common im_c;
  std::string im_sectors;
  auto* im = app.add_subcommand("intermediation", "Sector exposure report");
  add_common(im, im_c, false);
  im->add_option("--sectors", im_sectors, "Sector CSV (default: built-in table)");

  // decompose
  Common de_c;
  double de_shock = 0.10;
  std::string de_quintiles;
  auto* de = app.add_subcommand("decompose", "Consumption shock by income quintile");
  add_common(de, de_c, false);
  de->add_option("--shock", de_shock, "Aggregate income shock")->capture_default_str();
  de->add_option("--quintiles", de_quintiles, "Quintile CSV (default: built-in profile)");

  // regress
  Common rg_c;
  std::string rg_data, rg_formula;
  auto* rg = app.add_subcommand("regress", "OLS with HC1 robust standard errors");
  add_common(rg, rg_c, false);
  rg->add_option("--data", rg_data, "CSV with named columns")->required();
  rg->add_option("--formula", rg_formula, "Formula, e.g. 'y ~ x1 + x2'")->required();

  // indicators
  Common in_c;
  std::string in_rules, in_data;
  auto* in = app.add_subcommand("indicators", "Evaluate early-warning rules on local series");
  add_common(in, in_c, false);
  in->add_option("--rules", in_rules, "Rule file (default: built-in rules)");
  in->add_option("--data", in_data, "Directory of <series>.csv files")->required();

  // repro
  Common rp_c;
  rp_c.out = "repro";
  std::uint64_t rp_seed = 42;
  std::size_t rp_n = 2000;
  unsigned rp_jobs = default_jobs();
  auto* rp = app.add_subcommand("repro", "Run the full figure/table suite into a timestamped directory");
  add_common(rp, rp_c, false);
  rp->add_option("--seed", rp_seed, "Monte Carlo seed")->capture_default_str();
  rp->add_option("--n", rp_n, "Monte Carlo draws")->capture_default_str();
  rp->add_option("--jobs", rp_jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kConfig;
  }

  try {
    if (*sim) {
      const Config cfg = load(sim_c);
      Scenario s = find_scenario(cfg, sim_name);
      if (sim_dt) s.dt = *sim_dt;
      if (sim_horizon) s.horizon = *sim_horizon;
      check_scenario(s);
      const Trajectory t = simulate_path(s, cfg.calibration);
      Sink sink(sim_c.out);
      sink.put("simulate_" + s.name + ".csv", trajectory_csv(t));
      if (sim_c.svg) sink.put("simulate_" + s.name + ".svg", trajectory_panels(s.name, {{s.name, t}}));
      finish(sink, "manifest_simulate_" + s.name + ".txt", cmdline, cfg, std::nullopt, start);
      const Calibration c = effective_calibration(cfg.calibration, s);
      out << "scenario " << s.name << ": s_L(" << fmt_sig(s.horizon, 6) << ") = " << fmt_sig(t.final_labor_share(), 6)
          << ", cumulative consumption decline " << fmt_sig(100 * cumulative_consumption_decline(t, c), 4)
          << "%, collapse " << (t.collapse_time ? "t = " + fmt_sig(*t.collapse_time, 6) : std::string("none"))
          << ", regime " << to_string(regime_classify(c).kind) << "\n";
    } else if (*sw) {
      const Config cfg = load(sw_c);
      PolicyGrid grid{sw_lags, sw_taus, {}};
      grid.base.name = "sweep";
      grid.base.g_A_override = sw_g;
      grid.base.horizon = sw_horizon;
      grid.base.dt = sw_dt;
      check_scenario(grid.base);
      if (auto vs = validate(grid); !vs.empty()) throw ConfigError("invalid grid: " + vs.front().message);
      const auto cells = policy_sweep(grid, cfg.calibration, sw_jobs);
      Sink sink(sw_c.out);
      sink.put("sweep.csv", sweep_csv(cells));
      if (sw_c.svg) {
        std::vector<std::pair<std::string, Trajectory>> runs;
        for (const auto& pc : policy_cases()) {
          Scenario s = grid.base;
          s.policy = pc.policy;
          runs.emplace_back(pc.label, simulate_path(s, cfg.calibration));
        }
        sink.put("sweep.svg", policy_figure(runs, cells));
      }
      finish(sink, "manifest_sweep.txt", cmdline, cfg, std::nullopt, start);
      out << sweep_csv(cells);
    } else if (*mc) {
      const Config cfg = load(mc_c);
      Scenario guard;
      guard.name = "montecarlo";
      guard.horizon = mc_horizon;
      guard.dt = mc_dt;
      check_scenario(guard);
      const auto s = monte_carlo(mc_n, default_ranges(), cfg.calibration, mc_seed, mc_threshold,
                                 McOptions{mc_horizon, mc_dt, mc_jobs, mc_bins, -1.0, 1.0});
      Sink sink(mc_c.out);
      sink.put("montecarlo_summary.txt", mc_summary_text(s));
      sink.put("montecarlo_histogram.csv", histogram_csv(s));
      finish(sink, "manifest_montecarlo.txt", cmdline, cfg, mc_seed, start);
      out << mc_summary_text(s);
    } else if (*cr) {
      const Config cfg = load(cr_c);
      const BorrowerState b{cr_dscr, cr_sigma.value_or(cfg.calibration.sigma_r)};
      if (!(b.dscr > 0) || !(b.sigma_r > 0)) throw ConfigError("credit: --dscr and --sigma must be positive");
      for (double d : cr_deltas)
        if (!(d >= 0 && d < 1)) throw ConfigError("credit: each delta must lie in [0, 1)");
      const auto rows = dscr_sensitivity(b, cr_deltas);
      Sink sink(cr_c.out);
      sink.put("credit_sensitivity.csv", sensitivity_csv(rows));
      finish(sink, "manifest_credit.txt", cmdline, cfg, std::nullopt, start);
      out << sensitivity_csv(rows);
    } else if (*im) {
      const Config cfg = load(im_c);
      const auto sectors = im_sectors.empty() ? default_sectors() : load_sectors(im_sectors);
      const auto rows = sector_report(sectors);
      Sink sink(im_c.out);
      sink.put("intermediation_report.csv", sector_report_csv(rows));
      finish(sink, "manifest_intermediation.txt", cmdline, cfg, std::nullopt, start);
      out << sector_report_csv(rows);
    } else if (*de) {
      const Config cfg = load(de_c);
      const QuintileProfile p = de_quintiles.empty() ? default_quintiles() : load_quintiles(de_quintiles);
      if (auto vs = validate(p); !vs.empty()) throw ConfigError("quintiles: " + vs.front().message);
      const auto shock = consumption_shock(p, de_shock);
      Sink sink(de_c.out);
      sink.put("decomposition.csv", decomposition_csv(p, shock));
      finish(sink, "manifest_decompose.txt", cmdline, cfg, std::nullopt, start);
      out << decomposition_csv(p, shock);
    } else if (*rg) {
      const Config cfg = load(rg_c);
      const auto fit = regress_formula(read_file(rg_data), rg_formula);
      Sink sink(rg_c.out);
      sink.put("regression.txt", regression_table(fit));
      finish(sink, "manifest_regress.txt", cmdline, cfg, std::nullopt, start);
      out << regression_table(fit);
    } else if (*in) {
      const Config cfg = load(in_c);
      const auto rules = in_rules.empty() ? default_rules() : parse_rules(read_file(in_rules));
      const auto report = dashboard(rules, load_series_dir(in_data));
      Sink sink(in_c.out);
      sink.put("indicators.csv", dashboard_csv(report));
      sink.put("indicators.txt", dashboard_text(report));
      finish(sink, "manifest_indicators.txt", cmdline, cfg, std::nullopt, start);
      out << dashboard_text(report);
    } else if (*rp) {
      const Config cfg = load(rp_c);
      fs::path dir = fs::path(rp_c.out) / ("repro-" + timestamp_utc());
      for (int k = 2; fs::exists(dir); ++k)
        dir = fs::path(rp_c.out) / ("repro-" + timestamp_utc() + "-" + std::to_string(k));
      Sink sink(dir);

      // adoption scenarios and the reinstatement comparison
      std::vector<Scenario> scen;
      for (const char* n : {"baseline", "rapid", "extreme"}) scen.push_back(find_scenario(cfg, n));
      std::vector<std::pair<std::string, Trajectory>> fig3;
      for (const auto& s : scen) {
        check_scenario(s);
        Trajectory t = simulate_path(s, cfg.calibration);
        sink.put("fig3_" + s.name + ".csv", trajectory_csv(t));
        fig3.emplace_back(s.name, std::move(t));
      }
      Calibration strong = cfg.calibration;
      strong.rho0 *= 3;
      strong.eta *= 3;
      const Scenario& rapid = scen[1];
      Trajectory rapid_strong = simulate_path(rapid, strong);
      sink.put("fig3_rapid_tripled_reinstatement.csv", trajectory_csv(rapid_strong));
      {
        LineChart a{"Labor share under three adoption rates", "years", "labor share", {}};
        LineChart b{"Monetary velocity", "years", "velocity", {}};
        LineChart c{"Reinstatement comparison, rapid scenario", "years", "labor share", {}};
        LineChart d{"Consumption-to-GDP ratio", "years", "C/Y", {}};
        for (const auto& [label, t] : fig3) {
          a.lines.push_back(line_of(label, t, &TrajectoryPoint::s_L));
          b.lines.push_back(line_of(label, t, &TrajectoryPoint::velocity));
          d.lines.push_back(line_of(label, t, &TrajectoryPoint::consumption_ratio));
        }
        c.lines.push_back(line_of("rapid", fig3[1].second, &TrajectoryPoint::s_L));
        c.lines.push_back(line_of("rapid, 3x reinstatement", rapid_strong, &TrajectoryPoint::s_L));
        sink.put("fig3.svg", render_svg_panels({a, b, c, d}));
      }
      sink.put("table6_bands.csv", bands_csv(cfg, scen));

      // policy scenarios and the lag sweep
      PolicyGrid grid{{0, 0.5, 1, 1.5, 2, 2.5, 3, 4, 5, 6, 7, 8}, {0.03, 0.05, 0.10}, rapid};
      const auto cells = policy_sweep(grid, cfg.calibration, rp_jobs);
      sink.put("fig4_sweep.csv", sweep_csv(cells));
      std::vector<std::pair<std::string, Trajectory>> fig4;
      std::string policy_summary = "scenario,lag,tau,s_L_final,depth\n";
      for (const auto& pc : policy_cases()) {
        Scenario s = rapid;
        s.policy = pc.policy;
        Trajectory t = simulate_path(s, cfg.calibration);
        policy_summary += std::string(pc.label) + "," + fmt_sig(pc.policy.lag) + "," + fmt_sig(pc.policy.tau) +
                          "," + fmt_sig(t.final_labor_share()) + "," + fmt_sig(crisis_depth(t, pc.policy)) + "\n";
        fig4.emplace_back(pc.label, std::move(t));
      }
      sink.put("fig4_policy_scenarios.csv", policy_summary);
      sink.put("fig4.svg", policy_figure(fig4, cells));

      // DSCR sensitivity
      const BorrowerState b{1.5, cfg.calibration.sigma_r};
      sink.put("dscr_table.csv", sensitivity_csv(dscr_sensitivity(b, {0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.40, 0.50})));

      // consumption shock decomposition
      const QuintileProfile qp = default_quintiles();
      sink.put("decomposition.csv", decomposition_csv(qp, consumption_shock(qp, 0.10)));

      // intermediation exposure
      sink.put("table1_report.csv", sector_report_csv(sector_report(default_sectors())));

      // Monte Carlo
      const auto s = monte_carlo(rp_n, default_ranges(), cfg.calibration, rp_seed, 0.30,
                                 McOptions{10.0, 0.01, rp_jobs, 40, -1.0, 1.0});
      sink.put("montecarlo_summary.txt", mc_summary_text(s));
      sink.put("montecarlo_histogram.csv", histogram_csv(s));

      finish(sink, "manifest.txt", cmdline, cfg, rp_seed, start);
      out << "repro written to " << dir.string() << " (" << sink.names().size() << " artifacts)\n";
    }
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << "\n";
    return kConfig;
  } catch (const IndicatorError& e) {
    err << "rule error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kConfig;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kConfig;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const SamplingError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const RankDeficientError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const fs::filesystem_error& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  }
}

}  // namespace aistress::cli
