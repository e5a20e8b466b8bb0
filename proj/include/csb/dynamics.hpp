// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "csb/spectral.hpp"

namespace csb {

/// Ladder amplitudes of the evolved state at time t. Unit norm.
struct Amplitudes {
  double t = 0.0;
  std::vector<std::complex<double>> values;
};

/// Spectral propagation of the initial ladder state (1 0 ... 0)^T:
///   psi_j(t) = sum_k U_jk exp(-i lambda_k t) U_0k.
Amplitudes evolve(const Spectrum& s, double t);

/// Diagonal of the battery's reduced density matrix on its Dicke ladder.
/// Off-diagonal elements vanish identically (charger Dicke states with
/// distinct excitation number are orthogonal), so the vector is the full
/// reduced state.
struct BatteryPopulations {
  double t = 0.0;
  std::vector<double> p;  ///< p_0 .. p_{d-1}, sums to 1
  ModelParams params;
};

/// p_j = |psi_{j+1}|^2.
BatteryPopulations populations(const Amplitudes& a, const ModelParams& p);

/// One-cell closed form: p = ((1+r)/2, (1-r)/2) with
/// r(t) = cos^2(theta) + cos((d1 - d2) t) sin^2(theta).
BatteryPopulations populations_nb1(const ModelParams& p, double t);

/// Two-cell closed form at u1 = u2 (within 1e-9 relative), h = B,
/// delta = 0: with x = cos(omega t), omega = sqrt(u1^2 + u2^2),
/// p = ((1+x)^2/4, (1-x^2)/2, (1-x)^2/4).
BatteryPopulations populations_nb2_symmetric(const ModelParams& p, double t);

/// <psi|H|psi> in the ladder representation; constant under evolve.
double subspace_energy(const TridiagonalHamiltonian& h, const Amplitudes& a);

}  // namespace csb
