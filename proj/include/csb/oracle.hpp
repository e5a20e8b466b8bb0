// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <span>

#include "csb/dynamics.hpp"

namespace csb::oracle {

/// Hard cap on n_b + n_c for the dense engine (4096-dimensional matrices).
inline constexpr int kMaxQubits = 12;

/// Amplitude 1/sqrt(C(n,m)) on every n-qubit computational basis state of
/// Hamming weight m, zero elsewhere. Throws TooLarge for n > kMaxQubits.
Eigen::VectorXd dicke_vector(int n, int m);

/// Dense 2^(n_b+n_c) matrix of the untruncated Hamiltonian
///   B S^z + h J^z + A (S^+ J^- + S^- J^+) + 2 delta S^z J^z
/// built from single-qubit operators. Battery qubits occupy bits
/// 0..n_b-1 of the basis index, charger qubits bits n_b..n_b+n_c-1,
/// little-endian within each group; bit value 1 is spin up.
Eigen::MatrixXd full_hamiltonian(const ModelParams& p);

/// Dense-space engine: exact evolution of |0>_b |m>_c via one
/// eigendecomposition of the full Hamiltonian, reusable across times.
class DenseSolver {
 public:
  explicit DenseSolver(const ModelParams& p);

  /// Full state vector at time t.
  Eigen::VectorXcd state_at(double t) const;

  /// Battery reduced density matrix projected onto the Dicke basis,
  /// entries <D_j| rho_b |D_k>, size (n_b+1) x (n_b+1).
  Eigen::MatrixXcd battery_dicke_matrix(double t) const;

  /// The d = min(n_b, m) + 1 ladder populations at time t.
  BatteryPopulations populations_at(double t) const;

  /// Weight of rho_b outside the battery Dicke ladder at time t.
  double off_ladder_weight(double t) const;

 private:
  ModelParams params_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  Eigen::VectorXd initial_;
  Eigen::VectorXd coeffs_;  // eigenbasis components of the initial state
  std::vector<Eigen::VectorXd> battery_dicke_;  // |D_0> .. |D_{n_b}>
};

/// One-shot convenience wrapper around DenseSolver.
BatteryPopulations brute_force_populations(const ModelParams& p, double t);

/// Minimum of sum_j p_sigma(j) eps_j over all d! permutations sigma.
/// Throws TooLarge for d > 8.
double passive_energy_bruteforce(const BatteryPopulations& pop);

struct DeviationReport {
  double population = 0.0;  ///< max-norm population deviation
  double entropy = 0.0;
  double energy = 0.0;
  double ergotropy = 0.0;

  double max_abs() const;
  bool within(double tol) const { return max_abs() <= tol; }
};

/// Max deviations between the dense engine and the ladder engine over the
/// given times. Thermo quantities on both sides use the same Dicke-ladder
/// passive convention, so deviations isolate dynamics errors.
DeviationReport compare(const ModelParams& p, std::span<const double> times);

}  // namespace csb::oracle
