// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "csb/dynamics.hpp"

namespace csb {

/// Energetics of one battery population vector. Entropy in bits.
struct ThermoReport {
  double S = 0.0;    ///< entanglement entropy, -sum p log2 p
  double E = 0.0;    ///< battery energy sum_j p_j B(j - n_b/2)
  double E0 = 0.0;   ///< initial energy -B n_b / 2
  double dE = 0.0;   ///< injected energy E - E0
  double Ep = 0.0;   ///< passive-state energy
  double erg = 0.0;  ///< ergotropy E - Ep, >= 0
};

double entropy(const BatteryPopulations& pop);

double battery_energy(const BatteryPopulations& pop);

/// Energy after rearranging the populations descending against the
/// ascending ladder energies B(j - n_b/2), j = 0..d-1. Rearrangement is
/// restricted to the d-level Dicke ladder; degeneracies of the full
/// 2^n_b space are not used.
double passive_energy(const BatteryPopulations& pop);

/// battery_energy - passive_energy, clamped at zero.
double ergotropy(const BatteryPopulations& pop);

/// battery_energy + B n_b / 2. The initial state sits on the ladder
/// ground level, so this equals E(t) - E(0).
double injected_energy(const BatteryPopulations& pop);

ThermoReport thermo_report(const BatteryPopulations& pop);

}  // namespace csb
