// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "csb/thermo.hpp"

namespace csb {

struct TracePoint {
  double t = 0.0;
  std::vector<double> p;
  ThermoReport thermo;
  double norm = 0.0;    ///< sum |psi_j|^2, conserved at 1
  double energy = 0.0;  ///< <psi|H|psi>, conserved
};

struct ChargingTrace {
  ModelParams params;
  std::vector<TracePoint> points;
};

/// Populations plus thermo quantities on a time grid. The grid must be
/// nonempty (EmptyGrid), strictly increasing and nonnegative (Error).
/// Points at distinct times are independent; output order follows the grid.
ChargingTrace trace(const ModelParams& p, std::span<const double> grid);

/// n uniform points covering [0, t_end]; n = 1 gives just {0}.
std::vector<double> uniform_grid(double t_end, int n);

}  // namespace csb
