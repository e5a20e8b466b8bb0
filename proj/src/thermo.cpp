// SPDX-License-Identifier: Apache-2.0
#include "csb/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace csb {

double entropy(const BatteryPopulations& pop) {
  double s = 0.0;
  for (double x : pop.p) {
    if (x > 0.0) s -= x * std::log2(x);
  }
  // populations carry O(eps) noise; entropy itself is nonnegative
  return std::max(0.0, s);
}

double battery_energy(const BatteryPopulations& pop) {
  const double half_nb = 0.5 * pop.params.n_b;
  double e = 0.0;
  for (size_t j = 0; j < pop.p.size(); ++j) {
    e += pop.p[j] * pop.params.B * (static_cast<double>(j) - half_nb);
  }
  return e;
}

double passive_energy(const BatteryPopulations& pop) {
  std::vector<double> q = pop.p;
  std::stable_sort(q.begin(), q.end(), std::greater<>());
  const double half_nb = 0.5 * pop.params.n_b;
  double e = 0.0;
  for (size_t j = 0; j < q.size(); ++j) {
    e += q[j] * pop.params.B * (static_cast<double>(j) - half_nb);
  }
  return e;
}

double ergotropy(const BatteryPopulations& pop) {
  return std::max(0.0, battery_energy(pop) - passive_energy(pop));
}

double injected_energy(const BatteryPopulations& pop) {
  return battery_energy(pop) + 0.5 * pop.params.B * pop.params.n_b;
}

ThermoReport thermo_report(const BatteryPopulations& pop) {
  ThermoReport r;
  r.S = entropy(pop);
  r.E = battery_energy(pop);
  r.E0 = -0.5 * pop.params.B * pop.params.n_b;
  r.dE = r.E - r.E0;
  r.Ep = passive_energy(pop);
  r.erg = std::max(0.0, r.E - r.Ep);
  return r;
}

}  // namespace csb
