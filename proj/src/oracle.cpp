// SPDX-License-Identifier: Apache-2.0
#include "csb/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "csb/thermo.hpp"

namespace csb::oracle {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r *= static_cast<double>(n - k + i) / i;
  }
  return std::round(r);
}

int weight(unsigned s) { return std::popcount(s); }

}  // namespace

Eigen::VectorXd dicke_vector(int n, int m) {
  if (n < 1) throw Error("dicke_vector needs n >= 1");
  if (n > kMaxQubits) {
    throw TooLarge("dicke_vector supports at most " +
                   std::to_string(kMaxQubits) + " qubits, got " +
                   std::to_string(n));
  }
  if (m < 0 || m > n) {
    throw OutOfRangeM("dicke_vector needs 0 <= m <= n");
  }
  const unsigned dim = 1u << n;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  const double amp = 1.0 / std::sqrt(binomial(n, m));
  for (unsigned s = 0; s < dim; ++s) {
    if (weight(s) == m) v[s] = amp;
  }
  return v;
}

Eigen::MatrixXd full_hamiltonian(const ModelParams& raw) {
  const auto p = validate_params(raw);
  const int n = p.n_b + p.n_c;
  if (n > kMaxQubits) {
    throw TooLarge("n_b + n_c = " + std::to_string(n) + " exceeds the dense cap " +
                   std::to_string(kMaxQubits));
  }
  const int dim = 1 << n;
  const unsigned battery_mask = (1u << p.n_b) - 1u;
  Eigen::MatrixXd ham = Eigen::MatrixXd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    const unsigned us = static_cast<unsigned>(s);
    const double sz = weight(us & battery_mask) - 0.5 * p.n_b;
    const double jz = weight(us >> p.n_b) - 0.5 * p.n_c;
    ham(s, s) = p.B * sz + p.h * jz + 2.0 * p.delta * sz * jz;
    // S+ J- and S- J+ flip one battery bit against one charger bit.
    for (int i = 0; i < p.n_b; ++i) {
      for (int k = 0; k < p.n_c; ++k) {
        const int bi = (s >> i) & 1;
        const int ck = (s >> (p.n_b + k)) & 1;
        if (bi == 0 && ck == 1) {
          const int t = (s | (1 << i)) & ~(1 << (p.n_b + k));
          ham(t, s) += p.A;
        } else if (bi == 1 && ck == 0) {
          const int t = (s & ~(1 << i)) | (1 << (p.n_b + k));
          ham(t, s) += p.A;
        }
      }
    }
  }
  return ham;
}

DenseSolver::DenseSolver(const ModelParams& p) : params_(validate_params(p)) {
  const Eigen::MatrixXd ham = full_hamiltonian(params_);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ham);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("dense eigensolver failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();

  // |0>_b (x) |m>_c with battery bits low.
  const Eigen::VectorXd charger = dicke_vector(params_.n_c, params_.m);
  initial_ = Eigen::VectorXd::Zero(1 << (params_.n_b + params_.n_c));
  for (int c = 0; c < (1 << params_.n_c); ++c) {
    initial_[static_cast<long>(c) << params_.n_b] = charger[c];
  }

  coeffs_ = eigenvectors_.transpose() * initial_;

  battery_dicke_.reserve(params_.n_b + 1);
  for (int j = 0; j <= params_.n_b; ++j) {
    battery_dicke_.push_back(dicke_vector(params_.n_b, j));
  }
}

Eigen::VectorXcd DenseSolver::state_at(double t) const {
  Eigen::VectorXcd rotated(coeffs_.size());
  for (long k = 0; k < coeffs_.size(); ++k) {
    const double w = -eigenvalues_[k] * t;
    rotated[k] = coeffs_[k] * std::complex<double>(std::cos(w), std::sin(w));
  }
  return eigenvectors_ * rotated;
}

Eigen::MatrixXcd DenseSolver::battery_dicke_matrix(double t) const {
  const Eigen::VectorXcd psi = state_at(t);
  const int nb = params_.n_b;
  const int charger_dim = 1 << params_.n_c;
  const int battery_dim = 1 << nb;
  // A(j, c) = <D_j | psi block c>
  Eigen::MatrixXcd amp = Eigen::MatrixXcd::Zero(nb + 1, charger_dim);
  for (int c = 0; c < charger_dim; ++c) {
    const long base = static_cast<long>(c) << nb;
    for (int b = 0; b < battery_dim; ++b) {
      const int j = weight(static_cast<unsigned>(b));
      amp(j, c) += battery_dicke_[j][b] * psi[base + b];
    }
  }
  return amp * amp.adjoint();
}

BatteryPopulations DenseSolver::populations_at(double t) const {
  const Eigen::MatrixXcd rho = battery_dicke_matrix(t);
  const int d = subspace_dimension(params_);
  BatteryPopulations out;
  out.t = t;
  out.params = params_;
  out.p.resize(d);
  for (int j = 0; j < d; ++j) out.p[j] = rho(j, j).real();
  return out;
}

double DenseSolver::off_ladder_weight(double t) const {
  const Eigen::MatrixXcd rho = battery_dicke_matrix(t);
  return 1.0 - rho.diagonal().real().sum();
}

BatteryPopulations brute_force_populations(const ModelParams& p, double t) {
  return DenseSolver(p).populations_at(t);
}

double passive_energy_bruteforce(const BatteryPopulations& pop) {
  const int d = static_cast<int>(pop.p.size());
  if (d > 8) throw TooLarge("brute-force passive search capped at d = 8");
  std::vector<double> eps(d);
  for (int j = 0; j < d; ++j) {
    eps[j] = pop.params.B * (j - 0.5 * pop.params.n_b);
  }
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double e = 0.0;
    for (int j = 0; j < d; ++j) e += pop.p[idx[j]] * eps[j];
    best = std::min(best, e);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

double DeviationReport::max_abs() const {
  return std::max({population, entropy, energy, ergotropy});
}

DeviationReport compare(const ModelParams& raw, std::span<const double> times) {
  const auto p = validate_params(raw);
  const DenseSolver dense(p);
  const auto spec = diagonalize(build_hamiltonian(p));

  DeviationReport rep;
  for (double t : times) {
    const auto po = dense.populations_at(t);
    const auto ps = populations(evolve(spec, t), p);
    for (size_t j = 0; j < ps.p.size(); ++j) {
      rep.population = std::max(rep.population, std::abs(po.p[j] - ps.p[j]));
    }
    rep.entropy = std::max(rep.entropy, std::abs(csb::entropy(po) - csb::entropy(ps)));
    rep.energy =
        std::max(rep.energy, std::abs(battery_energy(po) - battery_energy(ps)));
    rep.ergotropy = std::max(
        rep.ergotropy, std::abs(csb::ergotropy(po) - csb::ergotropy(ps)));
  }
  return rep;
}

}  // namespace csb::oracle
