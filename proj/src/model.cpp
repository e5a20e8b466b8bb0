// SPDX-License-Identifier: Apache-2.0
#include "csb/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace csb {

ModelParams validate_params(const ModelParams& raw) {
  if (!std::isfinite(raw.B) || raw.B <= 0.0) {
    throw NonPositiveB("B must be a positive finite number, got " +
                       std::to_string(raw.B));
  }
  if (!std::isfinite(raw.h)) throw Error("h must be finite");
  if (!std::isfinite(raw.A)) throw Error("A must be finite");
  if (!std::isfinite(raw.delta)) throw Error("delta must be finite");
  if (raw.n_b < 1) {
    throw NonPositiveCount("n_b must be >= 1, got " + std::to_string(raw.n_b));
  }
  if (raw.n_c < 1) {
    throw NonPositiveCount("n_c must be >= 1, got " + std::to_string(raw.n_c));
  }
  if (raw.m < 0 || raw.m > raw.n_c) {
    throw OutOfRangeM("m must lie in [0, n_c] = [0, " +
                      std::to_string(raw.n_c) + "], got " +
                      std::to_string(raw.m));
  }
  return raw;
}

int subspace_dimension(const ModelParams& p) {
  return std::min(p.n_b, p.m) + 1;
}

double TridiagonalHamiltonian::max_abs() const {
  double v = 0.0;
  for (double x : diag) v = std::max(v, std::abs(x));
  for (double x : offdiag) v = std::max(v, std::abs(x));
  return v;
}

TridiagonalHamiltonian build_hamiltonian(const ModelParams& p) {
  const int d = subspace_dimension(p);
  TridiagonalHamiltonian h;
  h.diag.resize(d);
  h.offdiag.resize(d - 1);
  const double half_nb = 0.5 * p.n_b;
  const double half_nc = 0.5 * p.n_c;
  for (int j = 0; j < d; ++j) {
    const double sz = j - half_nb;
    const double jz = p.m - j - half_nc;
    h.diag[j] = p.B * sz + p.h * jz + 2.0 * p.delta * sz * jz;
  }
  for (int j = 1; j < d; ++j) {
    // Each factor is a positive integer for 1 <= j <= min(n_b, m).
    const double radicand = static_cast<double>(j) * (p.n_b - j + 1) *
                            (p.n_c - p.m + j) * (p.m - j + 1);
    h.offdiag[j - 1] = p.A * std::sqrt(radicand);
  }
  return h;
}

}  // namespace csb
