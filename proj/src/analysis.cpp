// SPDX-License-Identifier: Apache-2.0
#include "csb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace csb {

namespace {

constexpr double kRefineResolution = 1e-10;  // of the window length
constexpr double kPairTolerance = 1e-9;

bool near(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

double objective_value(const BatteryPopulations& pops, Objective objective) {
  return objective == Objective::injected_energy ? injected_energy(pops)
                                                 : ergotropy(pops);
}

// Maximizes f on [lo, hi] given samples of it: dense-scan winner plus
// safeguarded three-point parabolic refinement, iterated until the
// bracket is below tol. Falls back to bisecting the larger half whenever
// the parabola degenerates or its vertex leaves the bracket.
template <typename F>
double refine_maximum(const F& f, const std::vector<double>& ts,
                      const std::vector<double>& vs, double tol) {
  const int n = static_cast<int>(ts.size());
  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (vs[i] > vs[best]) best = i;
  }
  double a = ts[std::max(0, best - 1)];
  double b = ts[std::min(n - 1, best + 1)];
  double fa = vs[std::max(0, best - 1)];
  double fb = vs[std::min(n - 1, best + 1)];
  double c = ts[best];
  double fc = vs[best];
  if (c <= a) {
    c = 0.5 * (a + b);
    fc = f(c);
    if (fc < fa) return a;
  } else if (c >= b) {
    c = 0.5 * (a + b);
    fc = f(c);
    if (fc < fb) return b;
  }

  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    const double d1 = c - a;
    const double d2 = c - b;
    const double num = d1 * d1 * (fc - fb) - d2 * d2 * (fc - fa);
    const double den = d1 * (fc - fb) - d2 * (fc - fa);
    double u = 0.0;
    bool parabolic = false;
    if (den != 0.0) {
      u = c - 0.5 * num / den;
      parabolic = std::isfinite(u) && u > a && u < b && u != c;
    }
    if (!parabolic) {
      u = (c - a > b - c) ? 0.5 * (a + c) : 0.5 * (c + b);
      if (u == c || u <= a || u >= b) break;  // bracket saturated
    }
    const double fu = f(u);
    if (fu > fc) {
      if (u < c) {
        b = c;
        fb = fc;
      } else {
        a = c;
        fa = fc;
      }
      c = u;
      fc = fu;
    } else {
      if (u < c) {
        a = u;
        fa = fu;
      } else {
        b = u;
        fb = fu;
      }
    }
  }
  return c;
}

}  // namespace

double default_window_end(const ModelParams& raw) {
  const auto p = validate_params(raw);
  const auto spec = diagonalize(build_hamiltonian(p));
  const auto& ev = spec.eigenvalues;
  double scale = 1.0;
  for (double v : ev) scale = std::max(scale, std::abs(v));
  double gap_min = std::numeric_limits<double>::infinity();
  double prev = ev.front();
  for (size_t i = 1; i < ev.size(); ++i) {
    const double gap = ev[i] - prev;
    if (gap > 1e-12 * scale) {
      gap_min = std::min(gap_min, gap);
      prev = ev[i];
    }
    // gaps below the threshold merge the pair into one level
  }
  if (!std::isfinite(gap_min)) {
    throw NoChargingPossible("spectrum has no nonzero gap; dynamics is flat");
  }
  return 2.0 * std::numbers::pi_v<double> / gap_min;
}

std::vector<double> default_time_grid(const ModelParams& p, int samples) {
  return uniform_grid(default_window_end(p), samples);
}

ChargingSummary find_charging_time(const ModelParams& raw, Objective objective,
                                   std::optional<double> window_end,
                                   int samples) {
  const auto p = validate_params(raw);
  if (p.A == 0.0) throw NoChargingPossible("A = 0: objective identically 0");
  if (p.m == 0) throw NoChargingPossible("m = 0: objective identically 0");
  if (samples < 2) throw Error("search needs at least 2 samples");
  const double end = window_end ? *window_end : default_window_end(p);
  if (!(end > 0.0) || !std::isfinite(end)) {
    throw Error("window end must be positive and finite");
  }

  const auto ham = build_hamiltonian(p);
  const auto spec = diagonalize(ham);
  const auto eval = [&](double t) {
    return objective_value(populations(evolve(spec, t), p), objective);
  };

  std::vector<double> ts(samples);
  std::vector<double> vs(samples);
  for (int i = 0; i < samples; ++i) {
    ts[i] = end * static_cast<double>(i) / (samples - 1);
    vs[i] = eval(ts[i]);
  }
  const double T = refine_maximum(eval, ts, vs, kRefineResolution * end);

  ChargingSummary out;
  out.T = T;
  out.populations_at_T = populations(evolve(spec, T), p);
  out.report_at_T = thermo_report(out.populations_at_T);
  out.objective = objective;
  out.window = {0.0, end};
  out.samples = samples;
  return out;
}

std::vector<std::pair<int, ChargingSummary>> sweep_m(
    const ModelParams& raw, int m_min, int m_max, Objective objective,
    std::optional<double> window_end, int samples) {
  if (m_min < 1 || m_max > raw.n_c || m_min > m_max) {
    throw OutOfRangeM("sweep range must satisfy 1 <= m_min <= m_max <= n_c");
  }
  std::vector<std::pair<int, ChargingSummary>> out;
  out.reserve(m_max - m_min + 1);
  for (int m = m_min; m <= m_max; ++m) {
    ModelParams pm = raw;
    pm.m = m;
    out.emplace_back(m,
                     find_charging_time(pm, objective, window_end, samples));
  }
  return out;
}

double predict_tc_time(const ModelParams& raw) {
  const auto p = validate_params(raw);
  if (p.A == 0.0) throw NoChargingPossible("predictor needs A > 0");
  if (p.m < 1) throw NoChargingPossible("predictor needs m >= 1");
  return std::numbers::pi_v<double> /
         (2.0 * p.A * std::sqrt(static_cast<double>(p.m) * p.n_c));
}

double predict_ntc_time(const ModelParams& raw) {
  const auto p = validate_params(raw);
  if (p.A == 0.0) throw NoChargingPossible("predictor needs A > 0");
  if (p.m == 0 || p.m == p.n_c) {
    throw DegenerateFilling("k(1-k) = 0 at m = " + std::to_string(p.m));
  }
  const double k = static_cast<double>(p.m) / p.n_c;
  return std::numbers::pi_v<double> /
         (2.0 * p.A * std::sqrt(k * (1.0 - k)) * p.n_c);
}

double ergotropy_at_T_nb1(const ModelParams& raw) {
  const auto p = validate_params(raw);
  if (p.n_b != 1) {
    throw WrongCellCount("ergotropy_at_T_nb1 requires n_b = 1, got " +
                         std::to_string(p.n_b));
  }
  if (!near(p.delta, 0.0)) {
    throw UnsupportedRegime("ergotropy_at_T_nb1 requires delta = 0");
  }
  if (p.m < 1 || p.A == 0.0) {
    throw NoChargingPossible("charging time undefined for A = 0 or m = 0");
  }
  const double det = p.h - p.B;
  const double denom =
      4.0 * p.A * p.A * p.m * (p.n_c - p.m + 1) + det * det;
  return p.B * (1.0 - 2.0 * det * det / denom);
}

double ergotropy_at_T_nb2_closed_form(const ModelParams& raw) {
  const auto p = validate_params(raw);
  if (p.n_b != 2) {
    throw WrongCellCount("ergotropy_at_T_nb2_closed_form requires n_b = 2");
  }
  if (!near(p.h, p.B) || !near(p.delta, 0.0)) {
    throw UnsupportedRegime(
        "ergotropy_at_T_nb2_closed_form requires h = B and delta = 0");
  }
  if (p.m < 2) {
    throw UnsupportedRegime("ergotropy_at_T_nb2_closed_form requires m >= 2");
  }
  if (p.A == 0.0) throw NoChargingPossible("charging time undefined for A = 0");
  const auto ham = build_hamiltonian(p);
  const double a = ham.offdiag[0] * ham.offdiag[0];
  const double b = ham.offdiag[1] * ham.offdiag[1];
  return 2.0 * p.B * (-1.0 + 8.0 * a * b / ((a + b) * (a + b)));
}

std::pair<double, double> piecewise_nb2(const ModelParams& raw, double t) {
  const auto p = validate_params(raw);
  if (p.n_b != 2) throw WrongCellCount("piecewise_nb2 requires n_b = 2");
  if (!near(p.h, p.B) || !near(p.delta, 0.0)) {
    throw UnsupportedRegime("piecewise_nb2 requires h = B and delta = 0");
  }
  if (p.m < 2) throw UnsupportedRegime("piecewise_nb2 requires m >= 2");
  const auto ham = build_hamiltonian(p);
  const double u1 = ham.offdiag[0];
  const double u2 = ham.offdiag[1];
  if (std::abs(u1 - u2) > 1e-9 * std::max(std::abs(u1), std::abs(u2))) {
    throw UnsupportedRegime("piecewise_nb2 requires u1 = u2 within 1e-9");
  }
  const double x = std::cos(std::hypot(u1, u2) * t);

  double erg;
  if (x > 1.0 / 3.0) {
    erg = 0.0;
  } else if (x > 0.0) {
    erg = p.B * (-0.75 * (x + 1.0 / 3.0) * (x + 1.0 / 3.0) + 1.0 / 3.0);
  } else if (x > -1.0 / 3.0) {
    erg = p.B * (-0.75 * (x + 1.0) * (x + 1.0) + 1.0);
  } else {
    erg = -2.0 * p.B * x;
  }

  double s = 1.5 + 0.5 * x * x;
  if (1.0 + x > 0.0) s -= 0.5 * (1.0 + x) * (1.0 + x) * std::log2(1.0 + x);
  if (1.0 - x > 0.0) s -= 0.5 * (1.0 - x) * (1.0 - x) * std::log2(1.0 - x);
  if (1.0 - x * x > 0.0) s -= 0.5 * (1.0 - x * x) * std::log2(1.0 - x * x);
  return {erg, s};
}

TheoremReport check_theorems(const ModelParams& raw) {
  const auto p = validate_params(raw);
  TheoremReport rep;

  if (p.n_b == 1 && p.m >= 1 && p.A != 0.0) {
    // (a) pointwise anti-ordering of ergotropy and entropy where erg > 0
    const double end = default_window_end(p);
    const int n = 512;
    std::vector<double> ergs(n);
    std::vector<double> ents(n);
    for (int i = 0; i < n; ++i) {
      const auto pops = populations_nb1(p, end * i / (n - 1));
      ergs[i] = ergotropy(pops);
      ents[i] = entropy(pops);
    }
    for (int i = 0; i < n; ++i) {
      if (ergs[i] <= 0.0) continue;
      for (int j = i + 1; j < n; ++j) {
        if (ergs[j] <= 0.0) continue;
        const double de = ergs[i] - ergs[j];
        const double ds = ents[i] - ents[j];
        if (std::abs(de) <= 1e-12 || std::abs(ds) <= 1e-12) continue;
        ++rep.time_pairs_checked;
        if (de * ds > 0.0) {
          std::ostringstream msg;
          msg << "one-cell anti-ordering violated: (erg, S) = (" << ergs[i]
              << ", " << ents[i] << ") vs (" << ergs[j] << ", " << ents[j]
              << ")";
          throw PropertyViolation(msg.str());
        }
      }
    }
  }

  if (p.n_b == 2 && near(p.h, p.B) && near(p.delta, 0.0) && p.m >= 2 &&
      p.A != 0.0) {
    // (b) the middle ladder level empties at the charging time
    const auto summary = find_charging_time(p);
    const double p1 = summary.populations_at_T.p[1];
    rep.middle_population_at_T = p1;
    if (p1 > 1e-8) {
      std::ostringstream msg;
      msg << "two-cell middle population at T is " << p1 << " (> 1e-8)";
      throw PropertyViolation(msg.str());
    }
  }

  if (p.A != 0.0) {
    // (c) anti-ordering of erg(T) and S(T) across the m sweep; conjectural,
    // so violations are recorded rather than thrown.
    const auto sweeps = sweep_m(p, 1, p.n_c);
    for (size_t i = 0; i < sweeps.size(); ++i) {
      for (size_t j = i + 1; j < sweeps.size(); ++j) {
        const auto& ri = sweeps[i].second.report_at_T;
        const auto& rj = sweeps[j].second.report_at_T;
        const double de = ri.erg - rj.erg;
        const double ds = ri.S - rj.S;
        if (std::abs(de) <= kPairTolerance || std::abs(ds) <= kPairTolerance) {
          continue;
        }
        ++rep.sweep_pairs_checked;
        if (de * ds > 0.0) {
          std::ostringstream msg;
          msg << "m = " << sweeps[i].first << " vs m = " << sweeps[j].first
              << ": erg(T) " << ri.erg << " vs " << rj.erg << ", S(T) "
              << ri.S << " vs " << rj.S;
          rep.sweep_violations.push_back(msg.str());
        }
      }
    }
  }
  return rep;
}

}  // namespace csb
