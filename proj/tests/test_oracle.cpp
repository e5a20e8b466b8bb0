// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include <doctest.h>

#include "csb/oracle.hpp"
#include "csb/thermo.hpp"
#include "csb/trace.hpp"

using csb::ModelParams;
namespace oracle = csb::oracle;

TEST_SUITE("oracle") {

TEST_CASE("dicke vectors") {
  SUBCASE("two qubits, one excitation") {
    const auto v = oracle::dicke_vector(2, 1);
    CHECK(v[0] == 0.0);
    CHECK(v[1] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(v[2] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(v[3] == 0.0);
  }
  SUBCASE("zero excitations") {
    const auto v = oracle::dicke_vector(2, 0);
    CHECK(v[0] == 1.0);
    CHECK(v.tail(3).norm() == 0.0);
  }
  SUBCASE("three qubits, two excitations") {
    const auto v = oracle::dicke_vector(3, 2);
    int nonzero = 0;
    for (int s = 0; s < 8; ++s) {
      if (std::popcount(unsigned(s)) == 2) {
        CHECK(v[s] == doctest::Approx(1.0 / std::sqrt(3.0)));
        ++nonzero;
      } else {
        CHECK(v[s] == 0.0);
      }
    }
    CHECK(nonzero == 3);
  }
  SUBCASE("size cap") {
    CHECK_THROWS_AS(oracle::dicke_vector(13, 2), csb::TooLarge);
  }
}

TEST_CASE("dense hamiltonian") {
  SUBCASE("single battery and charger spin, couplings off") {
    const auto h = oracle::full_hamiltonian(ModelParams{2, 3, 0, 0, 1, 1, 1});
    CHECK(h(0, 0) == doctest::Approx(-1.0 - 1.5));
    CHECK(h(1, 1) == doctest::Approx(1.0 - 1.5));
    CHECK(h(2, 2) == doctest::Approx(-1.0 + 1.5));
    CHECK(h(3, 3) == doctest::Approx(1.0 + 1.5));
    CHECK((h - h.diagonal().asDiagonal().toDenseMatrix()).norm() == 0.0);
  }
  SUBCASE("hermiticity for random parameters") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
      const ModelParams p{u(rng), u(rng), u(rng), u(rng) - 1.5, 2, 3, 2};
      const auto h = oracle::full_hamiltonian(p);
      CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
  SUBCASE("total magnetization commutes with the hamiltonian") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    for (int trial = 0; trial < 5; ++trial) {
      const ModelParams p{u(rng), u(rng), u(rng), u(rng) - 1.5, 2, 4, 3};
      const auto h = oracle::full_hamiltonian(p);
      const int n = p.n_b + p.n_c;
      Eigen::VectorXd w(1 << n);
      for (int s = 0; s < (1 << n); ++s) {
        w[s] = std::popcount(unsigned(s)) - 0.5 * n;
      }
      const Eigen::MatrixXd commutator =
          h * w.asDiagonal().toDenseMatrix() - w.asDiagonal().toDenseMatrix() * h;
      CHECK(commutator.cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
  SUBCASE("size cap") {
    CHECK_THROWS_AS(oracle::full_hamiltonian(ModelParams{1, 1, 1, 0, 6, 8, 4}),
                    csb::TooLarge);
  }
}

TEST_CASE("brute-force populations") {
  SUBCASE("two-level transfer") {
    const ModelParams p{1, 1, 1, 0, 1, 2, 1};
    const oracle::DenseSolver solver(p);
    for (double t : {0.0, 0.4, 1.1, 2.9}) {
      const auto pops = solver.populations_at(t);
      const double s = std::sin(std::sqrt(2.0) * t);
      CHECK(std::abs(pops.p[1] - s * s) <= 1e-10);
    }
  }
  SUBCASE("initial state is exact") {
    const auto pops =
        oracle::brute_force_populations(ModelParams{1, 2, 1, 0.2, 2, 4, 3}, 0.0);
    CHECK(pops.p[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pops.p[1] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(pops.p[2] == doctest::Approx(0.0).epsilon(1e-14));
  }
  SUBCASE("matches the ladder engine at random times") {
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> time(0.0, 10.0);
    const ModelParams p{1, 1, 1, 0, 2, 4, 2};
    const oracle::DenseSolver solver(p);
    const auto spec = csb::diagonalize(csb::build_hamiltonian(p));
    for (int trial = 0; trial < 20; ++trial) {
      const double t = time(rng);
      const auto dense = solver.populations_at(t);
      const auto ladder = csb::populations(csb::evolve(spec, t), p);
      for (size_t j = 0; j < ladder.p.size(); ++j) {
        CHECK(std::abs(dense.p[j] - ladder.p[j]) <= 1e-10);
      }
    }
  }
}

TEST_CASE("reduced state stays on the Dicke ladder") {
  const ModelParams p{1, 2, 0.9, 0.3, 3, 5, 4};
  const oracle::DenseSolver solver(p);
  for (double t : {0.0, 0.7, 1.9, 4.2}) {
    CHECK(std::abs(solver.off_ladder_weight(t)) <= 1e-12);
    const auto rho = solver.battery_dicke_matrix(t);
    for (int j = 0; j <= p.n_b; ++j) {
      for (int k = 0; k <= p.n_b; ++k) {
        if (j != k) CHECK(std::abs(rho(j, k)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("brute-force passive energy") {
  csb::BatteryPopulations pops;
  pops.params = ModelParams{1, 1, 1, 0, 2, 3, 3};
  pops.p = {0.2, 0.5, 0.3};
  CHECK(oracle::passive_energy_bruteforce(pops) ==
        doctest::Approx(-0.3).epsilon(1e-14));
  SUBCASE("descending populations") {
    pops.p = {0.5, 0.3, 0.2};
    CHECK(oracle::passive_energy_bruteforce(pops) ==
          doctest::Approx(csb::battery_energy(pops)).epsilon(1e-14));
  }
  SUBCASE("agrees with the sorted route") {
    std::mt19937 rng(53);
    std::exponential_distribution<double> draw(1.0);
    for (int trial = 0; trial < 100; ++trial) {
      double total = 0.0;
      for (double& x : pops.p) {
        x = draw(rng);
        total += x;
      }
      for (double& x : pops.p) x /= total;
      CHECK(std::abs(oracle::passive_energy_bruteforce(pops) -
                     csb::passive_energy(pops)) <= 1e-14);
    }
  }
  SUBCASE("size cap") {
    csb::BatteryPopulations big;
    big.params = ModelParams{1, 1, 1, 0, 9, 9, 9};
    big.p.assign(9, 1.0 / 9.0);
    CHECK_THROWS_AS(oracle::passive_energy_bruteforce(big), csb::TooLarge);
  }
}

TEST_CASE("engine comparison") {
  SUBCASE("small resonant config") {
    const ModelParams p{1, 1, 1, 0, 1, 3, 2};
    const auto grid = csb::uniform_grid(5.0, 20);
    const auto rep = oracle::compare(p, grid);
    CHECK(rep.within(1e-9));
  }
  SUBCASE("single time zero") {
    const std::vector<double> t0{0.0};
    const auto rep = oracle::compare(ModelParams{1, 1, 1, 0, 2, 4, 2}, t0);
    CHECK(rep.max_abs() <= 1e-14);
  }
  SUBCASE("detuned config with Ising coupling") {
    const ModelParams p{1, 2, 1, 0.3, 3, 6, 4};
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> time(0.0, 8.0);
    std::vector<double> times(20);
    for (double& t : times) t = time(rng);
    std::sort(times.begin(), times.end());
    const auto rep = oracle::compare(p, times);
    CHECK(rep.within(1e-9));
  }
}

}  // TEST_SUITE
