// SPDX-License-Identifier: Apache-2.0
#include "csb/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace csb {

namespace {

bool near(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

Amplitudes evolve(const Spectrum& s, double t) {
  const int d = s.dim();
  Amplitudes a;
  a.t = t;
  a.values.assign(d, {0.0, 0.0});
  for (int k = 0; k < d; ++k) {
    const double w = -s.eigenvalues[k] * t;
    const std::complex<double> phase =
        s.vec(0, k) * std::complex<double>(std::cos(w), std::sin(w));
    for (int j = 0; j < d; ++j) a.values[j] += s.vec(j, k) * phase;
  }
  return a;
}

BatteryPopulations populations(const Amplitudes& a, const ModelParams& p) {
  BatteryPopulations out;
  out.t = a.t;
  out.params = p;
  out.p.reserve(a.values.size());
  for (const auto& v : a.values) out.p.push_back(std::norm(v));
  return out;
}

BatteryPopulations populations_nb1(const ModelParams& p, double t) {
  if (p.n_b != 1) {
    throw WrongCellCount("populations_nb1 requires n_b = 1, got " +
                         std::to_string(p.n_b));
  }
  if (p.m < 1) throw UnsupportedRegime("populations_nb1 requires m >= 1");
  const auto ham = build_hamiltonian(validate_params(p));
  const double u1 = ham.offdiag[0];
  const double half_split = 0.5 * (ham.diag[0] - ham.diag[1]);
  const double rad2 = u1 * u1 + half_split * half_split;
  double r = 1.0;
  if (rad2 > 0.0) {
    const double cos2 = half_split * half_split / rad2;
    const double sin2 = u1 * u1 / rad2;
    r = cos2 + std::cos(2.0 * std::sqrt(rad2) * t) * sin2;
  }
  BatteryPopulations out;
  out.t = t;
  out.params = p;
  out.p = {0.5 * (1.0 + r), 0.5 * (1.0 - r)};
  return out;
}

BatteryPopulations populations_nb2_symmetric(const ModelParams& p, double t) {
  if (p.n_b != 2) {
    throw WrongCellCount("populations_nb2_symmetric requires n_b = 2, got " +
                         std::to_string(p.n_b));
  }
  if (!near(p.h, p.B) || !near(p.delta, 0.0)) {
    throw UnsupportedRegime(
        "populations_nb2_symmetric requires h = B and delta = 0");
  }
  if (p.m < 2) {
    throw UnsupportedRegime("populations_nb2_symmetric requires m >= 2");
  }
  const auto ham = build_hamiltonian(validate_params(p));
  const double u1 = ham.offdiag[0];
  const double u2 = ham.offdiag[1];
  if (std::abs(u1 - u2) > 1e-9 * std::max(std::abs(u1), std::abs(u2))) {
    throw UnsupportedRegime("populations_nb2_symmetric requires u1 = u2 "
                            "within 1e-9 relative; m = (n_c + 2) / 2");
  }
  const double x = std::cos(std::hypot(u1, u2) * t);
  BatteryPopulations out;
  out.t = t;
  out.params = p;
  out.p = {0.25 * (1.0 + x) * (1.0 + x), 0.5 * (1.0 - x * x),
           0.25 * (1.0 - x) * (1.0 - x)};
  return out;
}

double subspace_energy(const TridiagonalHamiltonian& h, const Amplitudes& a) {
  const int d = h.dim();
  double e = 0.0;
  for (int j = 0; j < d; ++j) e += h.diag[j] * std::norm(a.values[j]);
  for (int j = 0; j + 1 < d; ++j) {
    e += 2.0 * h.offdiag[j] *
         (std::conj(a.values[j]) * a.values[j + 1]).real();
  }
  return e;
}

}  // namespace csb
