// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "csb/model.hpp"

namespace csb {

/// Eigendecomposition of a ladder Hamiltonian. Eigenvalues are ascending;
/// column k of the orthonormal matrix U is the eigenvector of
/// eigenvalues[k]. The first nonzero component of every column is
/// nonnegative, so outputs are reproducible run to run.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<double> vectors;  ///< row-major d x d

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  double vec(int row, int col) const { return vectors[row * dim() + col]; }
};

/// Numerical path: implicitly shifted QL iteration for symmetric
/// tridiagonal matrices, sweep budget 50*d. Satisfies
///   ||U diag(lambda) U^T - H||_max <= 1e-10 * max(1, ||H||_max)
///   ||U^T U - I||_max <= 1e-12.
Spectrum diagonalize(const TridiagonalHamiltonian& h);

/// Rotation angle of the one-cell eigenbasis, in [0, pi]; sin(theta) >= 0.
struct MixingAngle {
  double theta = 0.0;
};

/// Closed form for n_b = 1 (any h, delta):
///   sin(theta) = u1 / R,  cos(theta) = (b0 - b1) / (2R),
///   levels (b0 + b1)/2 -+ R,  R = sqrt(u1^2 + (b0 - b1)^2 / 4).
/// Eigenvalues come back ascending, i.e. the lower level first.
std::pair<MixingAngle, Spectrum> spectrum_nb1(const ModelParams& p);

/// Closed form for n_b = 2 with h = B, delta = 0, m >= 2: levels
/// e1 -+ sqrt(u1^2 + u2^2), e1, with e1 = B(m - 1 - n_c/2), ascending.
Spectrum spectrum_nb2(const ModelParams& p);

}  // namespace csb
