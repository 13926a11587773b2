#pragma once

// Bound-state eigenfunctions of the Landau Hamiltonian on the disk, level m:
//
//   phi_k(z) = (1-|z|^2)^{-m} z^{k-m} P_{min(m,k)}^{(|k-m|, 2(nu-m)-1)}(1-2|z|^2)
//
// with conj(z)^{m-k} instead of z^{k-m} when k < m.  k indexes the angular
// momentum ladder; the angular mode of phi_k is k - m.

#include <cmath>
#include <complex>
#include <vector>

#include "logpot/errors.hpp"
#include "logpot/params.hpp"
#include "logpot/quadrature.hpp"
#include "logpot/specfun.hpp"

namespace logpot {

namespace detail {

inline std::complex<double> ipow(std::complex<double> z, int n) {
  std::complex<double> out{1.0, 0.0};
  for (int i = 0; i < n; ++i) out *= z;
  return out;
}

} // namespace detail

// Radial factor of phi_k at radius r (t = r^2): everything except the
// e^{i(k-m) theta} phase.
inline double radial_phi(const spectral_params& p, basis_index k, double r, double t) {
  p.validate();
  k.validate();
  const int d = std::abs(k.k - p.m);
  const int mn = std::min(p.m, k.k);
  double rad = 1.0;
  for (int i = 0; i < d; ++i) rad *= r;
  return std::pow(1.0 - t, -static_cast<double>(p.m)) * rad *
         jacobi_p(mn, static_cast<double>(d), 2.0 * (p.nu - p.m) - 1.0, 1.0 - 2.0 * t);
}

inline std::complex<double> phi(const spectral_params& p, basis_index k,
                                std::complex<double> z) {
  p.validate();
  k.validate();
  const double t = std::norm(z);
  if (t >= 1.0) throw domain_error("phi: |z| must be < 1");
  const int d = std::abs(k.k - p.m);
  const int mn = std::min(p.m, k.k);
  const std::complex<double> ang =
      (k.k >= p.m) ? detail::ipow(z, k.k - p.m) : detail::ipow(std::conj(z), p.m - k.k);
  return std::pow(1.0 - t, -static_cast<double>(p.m)) * ang *
         jacobi_p(mn, static_cast<double>(d), 2.0 * (p.nu - p.m) - 1.0, 1.0 - 2.0 * t);
}

// ||phi_k||^2 in the (1-|z|^2)^{2nu-2} dA inner product, closed form.
inline double norm_sq(const spectral_params& p, basis_index k) {
  p.validate();
  k.validate();
  const int d = std::abs(k.k - p.m);
  const int mn = std::min(p.m, k.k);
  const double beta = 2.0 * (p.nu - p.m) - 1.0;
  // termwise ratio: (mn+1)_d / (2(nu-m)+mn)_d overflows factor-by-factor
  // past d ~ 170 if built as two products
  double ratio = 1.0;
  for (int i = 0; i < d; ++i)
    ratio *= (mn + 1.0 + i) / (2.0 * (p.nu - p.m) + mn + i);
  return pi_v / beta * ratio;
}

// gamma_k: normalized_phi = gamma_k * phi has unit norm; the sign keeps the
// leading radial coefficient positive.
inline double normalization(const spectral_params& p, basis_index k) {
  const int mn = std::min(p.m, k.k);
  const double g = 1.0 / std::sqrt(norm_sq(p, k));
  return (mn % 2 == 0) ? g : -g;
}

inline std::complex<double> normalized_phi(const spectral_params& p, basis_index k,
                                           std::complex<double> z) {
  return normalization(p, k) * phi(p, k, z);
}

// Gram matrix of normalized phi_0..phi_kmax over the tensor rule, row-major
// (kmax+1) x (kmax+1).  Distinct k carry distinct angular modes, so the
// discrete angular sums kill every off-diagonal exactly once
// n_angular > kmax; the diagonal tests the radial rule.
inline std::vector<std::complex<double>> gram_matrix(const spectral_params& p, int kmax,
                                                     const disk_quadrature& q) {
  p.validate();
  if (kmax < 0) throw size_error("gram_matrix: kmax must be >= 0");
  const int n = kmax + 1;
  std::vector<std::complex<double>> g(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      g[static_cast<std::size_t>(j) * n + k] = weighted_inner_product(
          [&](std::complex<double> z) { return normalized_phi(p, basis_index{j}, z); },
          [&](std::complex<double> z) { return normalized_phi(p, basis_index{k}, z); }, p,
          q);
  return g;
}

// Finite-difference check that phi_k lies in the expected eigenspace.  The
// Hamiltonian acts on Psi = (1-|z|^2)^nu phi as the conjugated operator
//   H Psi = 4 L Psi - 4 nu^2 Psi,
//   L = -(1-w)^2 dz dzbar - nu z (1-w) dz + nu zbar (1-w) dzbar + nu^2 w,
// with w = |z|^2.  The eigenvalue should not depend on k.  Two published
// expressions for it are tracked: eps = 4(nu-m)(1-(nu-m)) and the variant
// 4m(2nu-1-m), which differ by the constant 4nu(nu-1).
struct eigen_report {
  double residual = 0.0;    // max_j |H phi - eps_hat phi| / max(1, |phi|)
  double rayleigh = 0.0;    // eps_hat from the stencil
  double epsilon = 0.0;     // 4(nu-m)(1-(nu-m))
  double epsilon_alt = 0.0; // 4m(2nu-1-m)
  bool matches_epsilon = false;
  bool matches_alt = false;
};

inline eigen_report eigen_residual(const spectral_params& p, basis_index k,
                                   double grid_step) {
  p.validate();
  k.validate();
  if (!(grid_step > 0.0) || grid_step > 1e-2)
    throw step_error("eigen_residual: grid_step must be in (0, 1e-2]");
  const double h = grid_step;
  const double nu = p.nu;

  auto psi = [&](std::complex<double> z) {
    return std::pow(1.0 - std::norm(z), nu) * phi(p, k, z);
  };
  auto h_phi = [&](std::complex<double> z) {
    const std::complex<double> ih{0.0, h};
    const std::complex<double> f0 = psi(z);
    const std::complex<double> fxp = psi(z + h), fxm = psi(z - h);
    const std::complex<double> fyp = psi(z + ih), fym = psi(z - ih);
    const std::complex<double> fx = (fxp - fxm) / (2.0 * h);
    const std::complex<double> fy = (fyp - fym) / (2.0 * h);
    const std::complex<double> lap = (fxp + fxm + fyp + fym - 4.0 * f0) / (h * h);
    const std::complex<double> dz = 0.5 * (fx - std::complex<double>{0.0, 1.0} * fy);
    const std::complex<double> dzb = 0.5 * (fx + std::complex<double>{0.0, 1.0} * fy);
    const double w = std::norm(z);
    const std::complex<double> lv = -(1.0 - w) * (1.0 - w) * 0.25 * lap -
                                    nu * z * (1.0 - w) * dz +
                                    nu * std::conj(z) * (1.0 - w) * dzb + nu * nu * w * f0;
    return std::pow(1.0 - w, -nu) * (4.0 * lv - 4.0 * nu * nu * f0);
  };

  static const double radii[3] = {0.2, 0.45, 0.7};
  std::complex<double> num{0.0, 0.0};
  double den = 0.0;
  std::vector<std::complex<double>> hv(24), pv(24);
  std::size_t idx = 0;
  for (double r : radii) {
    for (int j = 0; j < 8; ++j) {
      const std::complex<double> z = std::polar(r, 2.0 * pi_v * j / 8.0);
      pv[idx] = phi(p, k, z);
      hv[idx] = h_phi(z);
      num += hv[idx] * std::conj(pv[idx]);
      den += std::norm(pv[idx]);
      ++idx;
    }
  }

  eigen_report rep;
  rep.rayleigh = num.real() / den;
  const double dnm = nu - p.m;
  rep.epsilon = 4.0 * dnm * (1.0 - dnm);
  rep.epsilon_alt = 4.0 * p.m * (2.0 * nu - 1.0 - p.m);
  double worst = 0.0;
  for (std::size_t i = 0; i < hv.size(); ++i) {
    const double res = std::abs(hv[i] - rep.rayleigh * pv[i]) / std::max(1.0, std::abs(pv[i]));
    worst = std::max(worst, res);
  }
  rep.residual = worst;
  rep.matches_epsilon = std::abs(rep.rayleigh - rep.epsilon) < 1e-3;
  rep.matches_alt = std::abs(rep.rayleigh - rep.epsilon_alt) < 1e-3;
  return rep;
}

} // namespace logpot
