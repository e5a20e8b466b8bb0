// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "csb/errors.hpp"

namespace csb {

/// Physical knobs of the central-spin battery (hbar = 1, all quantities
/// dimensionless). Energies are reported in the same units as B.
struct ModelParams {
  double B = 1.0;      ///< battery field; must be > 0
  double h = 1.0;      ///< charger field
  double A = 1.0;      ///< flip-flop coupling
  double delta = 0.0;  ///< Ising coupling
  int n_b = 1;         ///< battery cells (>= 1)
  int n_c = 1;         ///< charger units (>= 1)
  int m = 0;           ///< initial charger excitation, 0 <= m <= n_c
};

/// Checks B > 0, n_b >= 1, n_c >= 1, 0 <= m <= n_c and that all energies
/// are finite. Returns the record unchanged; never clamps.
///
/// Throws NonPositiveB, NonPositiveCount, OutOfRangeM (each naming the
/// field) or Error for a non-finite h, A or delta.
ModelParams validate_params(const ModelParams& raw);

/// Dimension of the invariant ladder {|j>_b |m-j>_c} containing the
/// initial state: min(n_b, m) + 1. For m < n_b the ladder truncates at
/// j = m, where the next coupling u_{m+1} vanishes identically.
int subspace_dimension(const ModelParams& p);

/// The Hamiltonian restricted to the invariant ladder: a real symmetric
/// tridiagonal matrix. Immutable after construction.
struct TridiagonalHamiltonian {
  std::vector<double> diag;     ///< b_0 .. b_{d-1}
  std::vector<double> offdiag;  ///< u_1 .. u_{d-1}

  int dim() const { return static_cast<int>(diag.size()); }
  double max_abs() const;
};

/// Entries of the ladder Hamiltonian:
///   b_j = B(j - n_b/2) + h(m - j - n_c/2) + 2 delta (j - n_b/2)(m - j - n_c/2)
///   u_j = A sqrt(j (n_b - j + 1)(n_c - m + j)(m - j + 1))
TridiagonalHamiltonian build_hamiltonian(const ModelParams& p);

}  // namespace csb
