// SPDX-License-Identifier: Apache-2.0
//
// csb — exact simulator for the central-spin quantum battery.
//
// Subcommands: trace, charge, sweep, regimes, oracle-check.
// Exit codes: 0 ok, 2 invalid parameters or size cap, 3 I/O failure,
// 4 no charging possible, 5 oracle deviation breach.

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csb/analysis.hpp"
#include "csb/oracle.hpp"
#include "csb/trace.hpp"

namespace {

using json = nlohmann::ordered_json;

// Shortest decimal form that round-trips to the same double.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct Options {
  csb::ModelParams params;
  std::string out = "-";
  std::string format = "csv";
  std::string objective = "de";
  double tmax = 0.0;  // 0 selects the default window
  int steps = 0;      // 0 selects the per-command default
  int m_min = 1;
  int m_max = 0;  // 0 selects n_c
};

void add_model_flags(CLI::App* cmd, Options& o, bool with_m) {
  // --h is a model field, so help stays on --help alone.
  cmd->set_help_flag("--help", "print help");
  cmd->add_option("--nb", o.params.n_b, "battery cells")->required();
  cmd->add_option("--nc", o.params.n_c, "charger units")->required();
  if (with_m) {
    cmd->add_option("--m", o.params.m, "initial charger excitation")
        ->required();
  }
  cmd->add_option("--B", o.params.B, "battery field (default 1)");
  cmd->add_option("--h", o.params.h, "charger field (default 1)");
  cmd->add_option("--A", o.params.A, "flip-flop coupling (default 1)");
  cmd->add_option("--delta", o.params.delta, "Ising coupling (default 0)");
  cmd->add_option("--out", o.out, "output path, '-' for stdout");
}

void add_range_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--m-min", o.m_min, "first charger excitation (default 1)");
  cmd->add_option("--m-max", o.m_max,
                  "last charger excitation (default n_c)");
}

int write_output(const std::string& path,
                 const std::function<void(std::ostream&)>& body) {
  if (path == "-") {
    body(std::cout);
    std::cout.flush();
    return std::cout ? 0 : 3;
  }
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 3;
  }
  body(file);
  file.flush();
  if (!file) {
    std::cerr << "error: writing " << path << " failed\n";
    return 3;
  }
  return 0;
}

csb::Objective parse_objective(const std::string& s) {
  return s == "erg" ? csb::Objective::ergotropy
                    : csb::Objective::injected_energy;
}

json trace_row_json(const csb::TracePoint& pt) {
  json row;
  row["t"] = pt.t;
  row["p"] = pt.p;
  row["S"] = pt.thermo.S;
  row["dE"] = pt.thermo.dE;
  row["erg"] = pt.thermo.erg;
  return row;
}

int cmd_trace(const Options& o) {
  const auto p = csb::validate_params(o.params);
  const int steps = o.steps > 0 ? o.steps : 2048;
  std::vector<double> grid;
  if (steps == 1) {
    grid = {0.0};
  } else {
    const double tend = o.tmax > 0 ? o.tmax : csb::default_window_end(p);
    grid = csb::uniform_grid(tend, steps);
  }
  const auto tr = csb::trace(p, grid);
  return write_output(o.out, [&](std::ostream& os) {
    if (o.format == "json") {
      json rows = json::array();
      for (const auto& pt : tr.points) rows.push_back(trace_row_json(pt));
      os << rows.dump(2) << "\n";
      return;
    }
    const int d = csb::subspace_dimension(p);
    os << "t";
    for (int j = 0; j < d; ++j) os << ",p" << j;
    os << ",S,dE,erg\n";
    for (const auto& pt : tr.points) {
      os << fmt(pt.t);
      for (double x : pt.p) os << ',' << fmt(x);
      os << ',' << fmt(pt.thermo.S) << ',' << fmt(pt.thermo.dE) << ','
         << fmt(pt.thermo.erg) << '\n';
    }
  });
}

json summary_json(const csb::ChargingSummary& s, const std::string& objective) {
  json j;
  j["T"] = s.T;
  j["dE_T"] = s.report_at_T.dE;
  j["erg_T"] = s.report_at_T.erg;
  j["S_T"] = s.report_at_T.S;
  j["Ep_T"] = s.report_at_T.Ep;
  j["populations_T"] = s.populations_at_T.p;
  j["objective"] = objective;
  j["window"] = {s.window.first, s.window.second};
  return j;
}

int cmd_charge(const Options& o) {
  const auto p = csb::validate_params(o.params);
  std::optional<double> window;
  if (o.tmax > 0) window = o.tmax;
  const int samples = o.steps > 0 ? o.steps : 4096;
  const auto summary =
      csb::find_charging_time(p, parse_objective(o.objective), window, samples);
  return write_output(o.out, [&](std::ostream& os) {
    os << summary_json(summary, o.objective).dump(2) << "\n";
  });
}

int cmd_sweep(const Options& o) {
  csb::ModelParams base = o.params;
  const int m_max = o.m_max > 0 ? o.m_max : base.n_c;
  base.m = o.m_min;
  csb::validate_params(base);
  std::optional<double> window;
  if (o.tmax > 0) window = o.tmax;
  const int samples = o.steps > 0 ? o.steps : 4096;
  const auto rows = csb::sweep_m(base, o.m_min, m_max,
                                 parse_objective(o.objective), window, samples);
  return write_output(o.out, [&](std::ostream& os) {
    if (o.format == "json") {
      json arr = json::array();
      for (const auto& [m, s] : rows) {
        json r;
        r["m"] = m;
        r["T"] = s.T;
        r["erg_T"] = s.report_at_T.erg;
        r["S_T"] = s.report_at_T.S;
        r["dE_T"] = s.report_at_T.dE;
        arr.push_back(r);
      }
      os << arr.dump(2) << "\n";
      return;
    }
    os << "m,T,erg_T,S_T,dE_T\n";
    for (const auto& [m, s] : rows) {
      os << m << ',' << fmt(s.T) << ',' << fmt(s.report_at_T.erg) << ','
         << fmt(s.report_at_T.S) << ',' << fmt(s.report_at_T.dE) << '\n';
    }
  });
}

int cmd_regimes(const Options& o) {
  csb::ModelParams base = o.params;
  const int m_max = o.m_max > 0 ? o.m_max : base.n_c;
  base.m = o.m_min;
  csb::validate_params(base);
  std::optional<double> window;
  if (o.tmax > 0) window = o.tmax;
  const int samples = o.steps > 0 ? o.steps : 4096;
  const auto rows = csb::sweep_m(base, o.m_min, m_max,
                                 parse_objective(o.objective), window, samples);
  return write_output(o.out, [&](std::ostream& os) {
    const auto predict = [&](int m) {
      csb::ModelParams pm = base;
      pm.m = m;
      double tc = csb::predict_tc_time(pm);
      double ntc;
      try {
        ntc = csb::predict_ntc_time(pm);
      } catch (const csb::DegenerateFilling&) {
        ntc = std::numeric_limits<double>::quiet_NaN();
      }
      return std::pair<double, double>{tc, ntc};
    };
    if (o.format == "json") {
      json arr = json::array();
      for (const auto& [m, s] : rows) {
        const auto [tc, ntc] = predict(m);
        json r;
        r["m"] = m;
        r["T_measured"] = s.T;
        r["T_tc"] = tc;
        r["T_ntc"] = std::isnan(ntc) ? json() : json(ntc);
        arr.push_back(r);
      }
      os << arr.dump(2) << "\n";
      return;
    }
    os << "m,T_measured,T_tc,T_ntc\n";
    for (const auto& [m, s] : rows) {
      const auto [tc, ntc] = predict(m);
      os << m << ',' << fmt(s.T) << ',' << fmt(tc) << ',' << fmt(ntc) << '\n';
    }
  });
}

int cmd_oracle_check(const Options& o) {
  const auto p = csb::validate_params(o.params);
  if (p.n_b + p.n_c > csb::oracle::kMaxQubits) {
    throw csb::TooLarge("n_b + n_c = " + std::to_string(p.n_b + p.n_c) +
                        " exceeds the dense cap " +
                        std::to_string(csb::oracle::kMaxQubits));
  }
  const int steps = o.steps > 0 ? o.steps : 20;
  const double tend = o.tmax > 0 ? o.tmax : 5.0;
  const auto grid = csb::uniform_grid(tend, steps);
  const auto rep = csb::oracle::compare(p, grid);
  constexpr double tol = 1e-9;
  const bool pass = rep.within(tol);
  const int rc = write_output(o.out, [&](std::ostream& os) {
    json j;
    j["nb"] = p.n_b;
    j["nc"] = p.n_c;
    j["m"] = p.m;
    j["times"] = steps;
    j["t_end"] = tend;
    j["max_population_dev"] = rep.population;
    j["max_entropy_dev"] = rep.entropy;
    j["max_energy_dev"] = rep.energy;
    j["max_ergotropy_dev"] = rep.ergotropy;
    j["tolerance"] = tol;
    j["pass"] = pass;
    os << j.dump(2) << "\n";
  });
  if (rc != 0) return rc;
  return pass ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact central-spin quantum battery simulator"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Options o;

  auto* trace_cmd = app.add_subcommand(
      "trace", "time series of ladder populations and thermo quantities");
  add_model_flags(trace_cmd, o, true);
  trace_cmd->add_option("--tmax", o.tmax, "end of the time grid");
  trace_cmd->add_option("--steps", o.steps, "grid points (default 2048)");
  trace_cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* charge_cmd =
      app.add_subcommand("charge", "locate the charging time and report it");
  add_model_flags(charge_cmd, o, true);
  charge_cmd->add_option("--tmax", o.tmax, "end of the search window");
  charge_cmd->add_option("--steps", o.steps,
                         "search grid samples (default 4096)");
  charge_cmd->add_option("--objective", o.objective,
                         "maximize injected energy (de) or ergotropy (erg)")
      ->check(CLI::IsMember({"de", "erg"}));

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "charging summary for every m in a range");
  add_model_flags(sweep_cmd, o, false);
  add_range_flags(sweep_cmd, o);
  sweep_cmd->add_option("--tmax", o.tmax, "end of the search window");
  sweep_cmd->add_option("--steps", o.steps,
                        "search grid samples (default 4096)");
  sweep_cmd->add_option("--objective", o.objective,
                        "maximize injected energy (de) or ergotropy (erg)")
      ->check(CLI::IsMember({"de", "erg"}));
  sweep_cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* regimes_cmd = app.add_subcommand(
      "regimes", "measured charging time against both regime predictors");
  add_model_flags(regimes_cmd, o, false);
  add_range_flags(regimes_cmd, o);
  regimes_cmd->add_option("--tmax", o.tmax, "end of the search window");
  regimes_cmd->add_option("--steps", o.steps,
                          "search grid samples (default 4096)");
  regimes_cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* oracle_cmd = app.add_subcommand(
      "oracle-check",
      "compare the ladder engine against the dense brute force");
  add_model_flags(oracle_cmd, o, true);
  oracle_cmd->add_option("--tmax", o.tmax, "end of the time grid (default 5)");
  oracle_cmd->add_option("--steps", o.steps, "time samples (default 20)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (trace_cmd->parsed()) return cmd_trace(o);
    if (charge_cmd->parsed()) return cmd_charge(o);
    if (sweep_cmd->parsed()) return cmd_sweep(o);
    if (regimes_cmd->parsed()) return cmd_regimes(o);
    if (oracle_cmd->parsed()) return cmd_oracle_check(o);
  } catch (const csb::NoChargingPossible& e) {
    std::cerr << "error: NoChargingPossible: " << e.what() << "\n";
    return 4;
  } catch (const csb::TooLarge& e) {
    std::cerr << "error: TooLarge: " << e.what() << "\n";
    return 2;
  } catch (const csb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
