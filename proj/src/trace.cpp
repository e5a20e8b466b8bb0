// SPDX-License-Identifier: Apache-2.0
#include "csb/trace.hpp"

#include <cmath>

namespace csb {

ChargingTrace trace(const ModelParams& raw, std::span<const double> grid) {
  const auto p = validate_params(raw);
  if (grid.empty()) throw EmptyGrid("trace needs at least one grid point");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw Error("time grid must be nonnegative and strictly increasing");
    }
  }

  const auto ham = build_hamiltonian(p);
  const auto spec = diagonalize(ham);

  ChargingTrace tr;
  tr.params = p;
  tr.points.reserve(grid.size());
  for (double t : grid) {
    const auto amps = evolve(spec, t);
    auto pops = populations(amps, p);
    TracePoint pt;
    pt.t = t;
    pt.thermo = thermo_report(pops);
    pt.norm = 0.0;
    for (double x : pops.p) pt.norm += x;
    pt.energy = subspace_energy(ham, amps);
    pt.p = std::move(pops.p);
    tr.points.push_back(std::move(pt));
  }
  return tr;
}

std::vector<double> uniform_grid(double t_end, int n) {
  if (n < 1) throw Error("grid needs at least one point");
  std::vector<double> g(n);
  g[0] = 0.0;
  for (int i = 1; i < n; ++i) {
    g[i] = t_end * static_cast<double>(i) / (n - 1);
  }
  return g;
}

}  // namespace csb
