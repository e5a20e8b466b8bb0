// SPDX-License-Identifier: Apache-2.0
#include "csb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace csb {

namespace {

// First nonzero component of every column made nonnegative, so repeated
// runs produce identical matrices.
void fix_column_signs(std::vector<double>& z, int n) {
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      const double v = z[j * n + k];
      if (v != 0.0) {
        if (v < 0.0) {
          for (int i = 0; i < n; ++i) z[i * n + k] = -z[i * n + k];
        }
        break;
      }
    }
  }
}

void sort_ascending(std::vector<double>& d, std::vector<double>& z, int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> ds(n);
  std::vector<double> zs(n * n);
  for (int k = 0; k < n; ++k) {
    ds[k] = d[order[k]];
    for (int j = 0; j < n; ++j) zs[j * n + k] = z[j * n + order[k]];
  }
  d = std::move(ds);
  z = std::move(zs);
}

bool near(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

Spectrum diagonalize(const TridiagonalHamiltonian& ham) {
  const int n = ham.dim();
  std::vector<double> d = ham.diag;
  std::vector<double> e(n, 0.0);
  std::copy(ham.offdiag.begin(), ham.offdiag.end(), e.begin());
  std::vector<double> z(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) z[static_cast<size_t>(i) * n + i] = 1.0;

  const int sweep_budget = 50 * n;
  int sweeps = 0;
  const double eps = std::numeric_limits<double>::epsilon();

  // Implicitly shifted QL: chase one rotation bulge per sweep from the
  // bottom of the unreduced block up to row l, accumulating rotations
  // into z.
  for (int l = 0; l < n; ++l) {
    for (;;) {
      int mm = l;
      while (mm < n - 1) {
        const double dd = std::abs(d[mm]) + std::abs(d[mm + 1]);
        if (std::abs(e[mm]) <= eps * dd) break;
        ++mm;
      }
      if (mm == l) break;
      if (++sweeps > sweep_budget) {
        throw ConvergenceFailure("tridiagonal QL did not converge within " +
                                 std::to_string(sweep_budget) + " sweeps");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[mm] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = mm - 1;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          // Recover from a vanishing rotation: split the block.
          d[i + 1] -= p;
          e[mm] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        for (int k = 0; k < n; ++k) {
          f = z[static_cast<size_t>(k) * n + i + 1];
          z[static_cast<size_t>(k) * n + i + 1] =
              s * z[static_cast<size_t>(k) * n + i] + c * f;
          z[static_cast<size_t>(k) * n + i] =
              c * z[static_cast<size_t>(k) * n + i] - s * f;
        }
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[mm] = 0.0;
    }
  }

  sort_ascending(d, z, n);
  fix_column_signs(z, n);

  Spectrum out;
  out.eigenvalues = std::move(d);
  out.vectors = std::move(z);
  return out;
}

std::pair<MixingAngle, Spectrum> spectrum_nb1(const ModelParams& p) {
  if (p.n_b != 1) {
    throw WrongCellCount("spectrum_nb1 requires n_b = 1, got " +
                         std::to_string(p.n_b));
  }
  if (p.m < 1) throw UnsupportedRegime("spectrum_nb1 requires m >= 1");
  const auto ham = build_hamiltonian(validate_params(p));
  const double b0 = ham.diag[0];
  const double b1 = ham.diag[1];
  const double u1 = ham.offdiag[0];
  const double half_split = 0.5 * (b0 - b1);
  const double rad = std::hypot(u1, half_split);
  const double theta = (rad == 0.0) ? 0.0 : std::atan2(u1, half_split);
  const double mean = 0.5 * (b0 + b1);

  Spectrum s;
  s.eigenvalues = {mean - rad, mean + rad};
  const double ch = std::cos(0.5 * theta);
  const double sh = std::sin(0.5 * theta);
  // Lower level first: columns (-sin(theta/2), cos(theta/2)) and
  // (cos(theta/2), sin(theta/2)).
  s.vectors = {-sh, ch, ch, sh};
  fix_column_signs(s.vectors, 2);
  return {MixingAngle{theta}, s};
}

Spectrum spectrum_nb2(const ModelParams& p) {
  if (p.n_b != 2) {
    throw WrongCellCount("spectrum_nb2 requires n_b = 2, got " +
                         std::to_string(p.n_b));
  }
  if (!near(p.h, p.B) || !near(p.delta, 0.0)) {
    throw UnsupportedRegime("spectrum_nb2 requires h = B and delta = 0");
  }
  if (p.m < 2) throw UnsupportedRegime("spectrum_nb2 requires m >= 2");
  const auto ham = build_hamiltonian(validate_params(p));
  const double u1 = ham.offdiag[0];
  const double u2 = ham.offdiag[1];
  const double e1 = p.B * (p.m - 1 - 0.5 * p.n_c);
  const double w = std::hypot(u1, u2);

  Spectrum s;
  s.eigenvalues = {e1 - w, e1, e1 + w};
  if (w == 0.0) {
    s.vectors = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return s;
  }
  const double q = 1.0 / (std::numbers::sqrt2_v<double> * w);
  // Columns ascending: (u1, -w, u2), (sqrt2 u2, 0, -sqrt2 u1), (u1, w, u2),
  // all over sqrt(2) w.
  s.vectors = {u1 * q,  u2 / w,  u1 * q,  //
               -w * q,  0.0,     w * q,   //
               u2 * q,  -u1 / w, u2 * q};
  fix_column_signs(s.vectors, 3);
  return s;
}

}  // namespace csb
