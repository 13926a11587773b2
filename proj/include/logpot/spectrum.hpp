#pragma once

// Singular values lambda_k = ||L_nu Phi_k|| and the closed-form series for
// them.  The authoritative number is always the quadrature oracle
// (singular_value_oracle); the closed forms are a validated-where-possible
// layer.  Three closed evaluations coexist:
//   * reconstructed: exact Beta-function sums obtained by integrating the
//     reconciled profile formulas against the measure (matches the oracle);
//   * printed: the published J1/J2/J3 and diagonal series taken verbatim,
//     including their Gamma-argument bookkeeping (these omit the measure
//     weight and normalization and are flagged, never silently accepted);
//   * printed_beta: the printed series with only the Beta-integral step
//     redone correctly from the printed I3/I4 (ledger diagnostic).

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "logpot/basis.hpp"
#include "logpot/errors.hpp"
#include "logpot/params.hpp"
#include "logpot/quadrature.hpp"
#include "logpot/specfun.hpp"
#include "logpot/transform.hpp"

namespace logpot {

// Cauchy-product coefficient A_n of the squared kernel series
// [sum_i (1-m)_i (2(nu-m)+k)_i / ((2(nu-m))_i i!) x^i]^2.
// Exact finite sum; vanishes for n >= 2m-1 when m >= 1.
inline double series_coefficient_A(const spectral_params& p, basis_index k, int n) {
  if (n < 0) throw parameter_error("series_coefficient_A: n must be >= 0");
  k.validate();
  auto coef = [&](int i) {
    return pochhammer(1.0 - p.m, i) * pochhammer(2.0 * (p.nu - p.m) + k.k, i) /
           (pochhammer(2.0 * (p.nu - p.m), i) * pochhammer(1.0, i));
  };
  double s = 0.0;
  for (int i = 0; i <= n; ++i) s += coef(i) * coef(n - i);
  return s;
}

namespace printed {

// The published A_n carries a single 1/n! in place of the Cauchy 1/(i!(n-i)!).
// For m = 0 the factors (1)_i = i! overflow separately long before the
// quotient does (it only grows polynomially), so that branch runs in log
// space.
inline double series_coefficient_A(const spectral_params& p, basis_index k, int n) {
  if (n < 0) throw parameter_error("series_coefficient_A: n must be >= 0");
  const double b = 2.0 * (p.nu - p.m) + k.k;
  const double c = 2.0 * (p.nu - p.m);
  if (p.m == 0) {
    const double lb = ln_gamma(b), lc = ln_gamma(c), lgn = ln_gamma(n + 1.0);
    auto lr = [&](int i) {
      return ln_gamma(1.0 + i) + ln_gamma(b + i) - lb - (ln_gamma(c + i) - lc);
    };
    double s = 0.0;
    for (int i = 0; i <= n; ++i) s += std::exp(lr(i) + lr(n - i) - lgn);
    return s;
  }
  double nfact = 1.0;
  for (int i = 2; i <= n; ++i) nfact *= i;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double p1 = pochhammer(1.0 - p.m, i);
    const double p2 = pochhammer(1.0 - p.m, n - i);
    if (p1 == 0.0 || p2 == 0.0) continue;
    s += p1 * p2 * pochhammer(b, i) * pochhammer(b, n - i) /
         (pochhammer(c, i) * pochhammer(c, n - i));
  }
  return s / nfact;
}

} // namespace printed

// ---------------------------------------------------------------------------
// Oracle
// ---------------------------------------------------------------------------

// lambda_k^2 = 2 pi ∫_0^1 radial(rho)^2 (1-rho^2)^{2nu-2} rho drho with the
// radial profile taken from the numerical transform (never the closed forms).
// Batched over k: each outer radial node builds one kink-split angular table
// shared by every mode.
inline std::vector<double> singular_values_oracle(const spectral_params& p,
                                                  const std::vector<int>& ks,
                                                  const disk_quadrature& q,
                                                  transform_options opt = {}) {
  p.validate();
  if (q.n_radial < 2 || q.n_angular < 8)
    throw size_error("singular_values_oracle: rule not built");
  std::vector<int> modes;
  modes.reserve(ks.size());
  for (int k : ks) {
    basis_index{k}.validate();
    modes.push_back(k - p.m);
  }
  std::vector<double> acc(ks.size(), 0.0);
  for (int i = 0; i < q.n_radial; ++i) {
    const double t = q.t[i];
    const double rho = std::sqrt(t);
    radial_transform_table tab(rho, p, q, modes, opt);
    const double w = q.wt[i] * std::pow(1.0 - t, 2.0 * p.nu - 2.0);
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      const int k = ks[ki];
      const double prof = tab.profile(ki, [&](double r, double tt) {
        return normalization(p, basis_index{k}) * radial_phi(p, basis_index{k}, r, tt);
      });
      acc[ki] += w * prof * prof;
    }
  }
  std::vector<double> lam(ks.size());
  for (std::size_t ki = 0; ki < ks.size(); ++ki) lam[ki] = std::sqrt(pi_v * acc[ki]);
  return lam;
}

inline double singular_value_oracle(const spectral_params& p, basis_index k,
                                    const disk_quadrature& q) {
  return singular_values_oracle(p, {k.k}, q)[0];
}

// ---------------------------------------------------------------------------
// Reconstructed closed forms
// ---------------------------------------------------------------------------
namespace detail {

// m >= 1, k > m: lambda^2 = pi (pi gamma/(2d))^2 [c3^2 S33 + c4^2 S44 + 2 c3 c4 S34]
// where S are Beta-weighted double sums over the terminating series
// coefficients of the profile's 2F1 (in rho^2) and 3F2 (in X).
inline double lambda2_beta_upper(const spectral_params& p, int k) {
  const double nu = p.nu;
  const int m = p.m;
  const int d = k - m;
  double mfact = 1.0;
  for (int i = 2; i <= m; ++i) mfact *= i;
  std::vector<double> a3(m), a4(m + 1);
  for (int i = 0; i < m; ++i)
    a3[i] = pochhammer(1.0 - m, i) * pochhammer(2.0 * (nu - m) + k, i) /
            (pochhammer(2.0 + d, i) * pochhammer(1.0, i));
  for (int j = 0; j <= m; ++j)
    a4[j] = pochhammer(-static_cast<double>(m), j) * pochhammer(2.0 * (nu - m) + k, j) *
            pochhammer(2.0 * nu - m - 1.0, j) /
            (pochhammer(2.0 * (nu - m), j) * pochhammer(2.0 * nu - m, j) *
             pochhammer(1.0, j));
  const double qe = 6.0 * nu - 2.0 * m - 4.0;
  double s33 = 0.0, s44 = 0.0, s34 = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      s33 += a3[i] * a3[j] * beta_ab(d + 3.0 + i + j, qe + 1.0);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      s44 += a4[i] * a4[j] * beta_ab(d + 1.0, qe + 1.0 + i + j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= m; ++j)
      s34 += a3[i] * a4[j] * beta_ab(d + 2.0 + i, qe + 1.0 + j);
  const double c3 = pochhammer(1.0 + d, m) / (mfact * (d + 1.0));
  const double c4 = ((m % 2 == 0) ? 1.0 : -1.0) * pochhammer(2.0 * (nu - m), m) /
                    (mfact * (2.0 * nu - m - 1.0));
  const double gam = normalization(p, basis_index{k});
  const double pref = pi_v * gam / (2.0 * d);
  return pi_v * pref * pref * (c3 * c3 * s33 + c4 * c4 * s44 + 2.0 * c3 * c4 * s34);
}

// m >= 1, k = m: lambda^2 = (pi^3 gamma^2/4)(alpha/(2(2nu-m)))^2
//                          sum_{i,j} c_i c_j / (i+j+6nu-2m-1).
inline double lambda2_beta_diag(const spectral_params& p) {
  const double nu = p.nu;
  const int m = p.m;
  std::vector<double> c(m);
  for (int i = 0; i < m; ++i)
    c[i] = pochhammer(1.0 - m, i) * pochhammer(2.0 * nu - m, i) *
           pochhammer(2.0 * nu - m, i) /
           (pochhammer(2.0 * (nu - m), i) * pochhammer(2.0 * nu - m + 1.0, i) *
            pochhammer(1.0, i));
  double s = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s += c[i] * c[j] / (i + j + 6.0 * nu - 2.0 * m - 1.0);
  const double gam = normalization(p, basis_index{p.m});
  const double a = coeff_alpha(p) / (2.0 * (2.0 * nu - m));
  return pi_v * pi_v * pi_v * gam * gam / 4.0 * a * a * s;
}

// Fallback exact route when the Beta sums do not apply (m = 0 for every k,
// and k < m): 1D Gauss-Legendre quadrature of the closed profile squared
// against the measure.  Still purely closed-form input.
inline double lambda2_profile_quadrature(const spectral_params& p, int k) {
  std::vector<double> gx, gw;
  gauss_legendre_01(96, gx, gw);
  double acc = 0.0;
  for (std::size_t i = 0; i < gx.size(); ++i) {
    const double t = gx[i];
    const double rho = std::sqrt(t);
    const double prof = (k == p.m) ? radial_action_diag(p, rho)
                                   : radial_action_offdiag(p, basis_index{k}, rho);
    acc += gw[i] * prof * prof * std::pow(1.0 - t, 2.0 * p.nu - 2.0);
  }
  return pi_v * acc;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Printed series, verbatim
// ---------------------------------------------------------------------------
namespace printed {

// Diagonal: lambda_m^2 = [alpha (2(2nu-m)-1) / (8 pi (2nu-m+1))] sum_n B_n/(n+2nu-m).
// The printed B_n definition is self-indexed (a sum over n inside a formula
// for B_n); the only reading that makes the series well-formed is the Cauchy
// coefficient of the squared 3F2 of the k = m proof, which is what this uses.
inline double singular_value_diag(const spectral_params& p,
                                  const truncation_policy& pol = {}) {
  pol.validate();
  const double nu = p.nu;
  const int m = p.m;
  // For m = 0 the coefficient telescopes to (2nu+1)/(2nu+1+i); the direct
  // pochhammer products overflow separately around i = 170.
  auto bcoef = [&](int i) {
    if (m == 0) return (2.0 * nu + 1.0) / (2.0 * nu + 1.0 + i);
    return pochhammer(1.0 - m, i) * pochhammer(2.0 * nu - m, i) *
           pochhammer(2.0 * (nu - m) + 1.0, i) /
           (pochhammer(2.0 * (nu - m), i) * pochhammer(2.0 * nu - m + 2.0, i) *
            pochhammer(1.0, i));
  };
  double s = 0.0;
  if (m >= 1) {
    for (int n = 0; n <= 2 * m - 2; ++n) {
      double bn = 0.0;
      for (int i = 0; i <= n; ++i) bn += bcoef(i) * bcoef(n - i);
      s += bn / (n + 2.0 * nu - m);
    }
  } else {
    std::vector<double> b;
    b.reserve(256);
    int small_run = 0;
    bool done = false;
    for (int n = 0; n < static_cast<int>(pol.max_terms); ++n) {
      b.push_back(bcoef(n));
      double bn = 0.0;
      for (int i = 0; i <= n; ++i) bn += b[i] * b[n - i];
      const double term = bn / (n + 2.0 * nu - m);
      s += term;
      if (std::abs(term) <= std::max(pol.abs_tol, pol.rel_tol * std::abs(s))) {
        if (++small_run >= 2) {
          done = true;
          break;
        }
      } else {
        small_run = 0;
      }
    }
    if (!done)
      throw truncation_error("printed diagonal series: term budget exhausted");
  }
  const double lam2 = coeff_alpha(p) * (2.0 * (2.0 * nu - m) - 1.0) /
                      (8.0 * pi_v * (2.0 * nu - m + 1.0)) * s;
  if (lam2 < 0.0)
    throw domain_error("printed diagonal series: negative value under square root");
  return std::sqrt(lam2);
}

// Off-diagonal: lambda_k = sqrt(J1 + J2 + J3) with the published Gamma
// arguments.  Gamma(4nu-k-3m) in J3 is non-positive for k >= 4nu-3m; per the
// validity contract such rows raise (and are flagged), never return numbers.
inline double singular_value_offdiag(const spectral_params& p, basis_index k,
                                     const truncation_policy& pol = {}) {
  pol.validate();
  const double nu = p.nu;
  const int m = p.m;
  const int kk = k.k;
  const double g3 = 4.0 * nu - kk - 3.0 * m;
  if (g3 <= 0.0)
    throw pole_error("printed J3: Gamma(4nu-k-3m) has a non-positive argument");
  double mfact = 1.0;
  for (int i = 2; i <= m; ++i) mfact *= i;
  const double pref1 = pochhammer(1.0 + kk - m, m) / (mfact * (kk - m + 1.0));
  if (!std::isfinite(pref1))
    throw domain_error("printed J-series: (k-m+1) denominator vanishes");
  const double alpha = coeff_alpha(p);
  const double pref2 = alpha / (2.0 * nu - m - 1.0);
  const double w = 4.0 * nu - 2.0 * m - 1.0;

  const int nmax = (m >= 1) ? (2 * m - 1) : static_cast<int>(pol.max_terms);
  double j1 = 0.0, j2 = 0.0, sa = 0.0;
  double prev1 = 0.0, prev2 = 0.0;
  int grow = 0, small_run = 0;
  bool done = (m >= 1);
  // m = 0: A_n via the incremental log-ratio ladder (see series_coefficient_A).
  const double bb = 2.0 * (nu - m) + kk, cc = 2.0 * (nu - m);
  std::vector<double> lr{0.0};
  for (int n = 0; n < nmax; ++n) {
    double an;
    if (m == 0) {
      if (n >= 1) lr.push_back(lr.back() + std::log(n * (bb + n - 1.0) / (cc + n - 1.0)));
      const double lgn = ln_gamma(n + 1.0);
      an = 0.0;
      for (int i = 0; i <= n; ++i) an += std::exp(lr[i] + lr[n - i] - lgn);
    } else {
      an = printed::series_coefficient_A(p, k, n);
    }
    const double num1[2] = {2.0 * n + 2.0 * kk - 2.0 * m + 5.0, w};
    const double den1[1] = {2.0 * n + 2.0 * kk - 4.0 * m + 4.0 * nu + 6.0};
    const double t1 = an * logpot::detail::gamma_ratio(num1, 2, den1, 1);
    const double t2 = an * beta_ab(2.0 * n + 2.0, w);
    j1 += t1;
    j2 += t2;
    sa += an;
    if (m == 0) {
      const double mag = std::abs(t1) + std::abs(t2);
      const double pmag = std::abs(prev1) + std::abs(prev2);
      if (n > 4 && mag > pmag) {
        if (++grow >= 3)
          throw divergence_error("printed J-series diverges (growing terms)");
      } else {
        grow = 0;
      }
      if (mag <= std::max(pol.abs_tol, pol.rel_tol * (std::abs(j1) + std::abs(j2)))) {
        if (++small_run >= 2) {
          done = true;
          break;
        }
      } else {
        small_run = 0;
      }
      prev1 = t1;
      prev2 = t2;
    }
  }
  if (!done) throw truncation_error("printed J-series: term budget exhausted");
  j1 *= pref1 * pref1;
  j2 *= pref2 * pref2;
  const double num3[2] = {kk - m + 2.0, w};
  const double den3[1] = {g3};
  const double j3 = pref1 * pref2 * logpot::detail::gamma_ratio(num3, 2, den3, 1) * sa;
  const double lam2 = j1 + j2 + j3;
  if (lam2 < 0.0)
    throw domain_error("printed J-series: negative value under square root");
  return std::sqrt(lam2);
}

inline double singular_value(const spectral_params& p, basis_index k,
                             const truncation_policy& pol = {}) {
  return (k.k == p.m) ? singular_value_diag(p, pol)
                      : singular_value_offdiag(p, k, pol);
}

// Ledger diagnostic: the printed series with only the Beta-integral step
// redone from the printed I3/I4 integrands (half-argument bookkeeping the
// published Gamma arguments garble).  Still omits the measure weight.
inline double singular_value_beta_args(const spectral_params& p, basis_index k,
                                       const truncation_policy& pol = {}) {
  pol.validate();
  const double nu = p.nu;
  const int m = p.m;
  const int kk = k.k;
  if (kk == m) return singular_value_diag(p, pol);
  double mfact = 1.0;
  for (int i = 2; i <= m; ++i) mfact *= i;
  const double pref1 = pochhammer(1.0 + kk - m, m) / (mfact * (kk - m + 1.0));
  if (!std::isfinite(pref1))
    throw domain_error("printed J-series: (k-m+1) denominator vanishes");
  const double pref2 = coeff_alpha(p) / (2.0 * nu - m - 1.0);
  const double w = 4.0 * nu - 2.0 * m - 1.0;
  const double d = kk - m;
  const int nmax = (m >= 1) ? (2 * m - 1) : static_cast<int>(pol.max_terms);
  double j1 = 0.0, j2 = 0.0, j3 = 0.0;
  double prev = 0.0;
  int grow = 0, small_run = 0;
  bool done = (m >= 1);
  const double bb = 2.0 * (nu - m) + kk, cc = 2.0 * (nu - m);
  std::vector<double> lr{0.0};
  for (int n = 0; n < nmax; ++n) {
    double an;
    if (m == 0) {
      if (n >= 1) lr.push_back(lr.back() + std::log(n * (bb + n - 1.0) / (cc + n - 1.0)));
      const double lgn = ln_gamma(n + 1.0);
      an = 0.0;
      for (int i = 0; i <= n; ++i) an += std::exp(lr[i] + lr[n - i] - lgn);
    } else {
      an = printed::series_coefficient_A(p, k, n);
    }
    const double t1 = an * 0.5 * beta_ab(n + d + 3.0, w);
    const double t2 = an * 0.5 * beta_ab(n + 1.0, w);
    const double t3 = an * beta_ab(n + 0.5 * d + 2.0, w);
    j1 += t1;
    j2 += t2;
    j3 += t3;
    if (m == 0) {
      const double mag = std::abs(t1) + std::abs(t2) + std::abs(t3);
      if (n > 4 && mag > prev) {
        if (++grow >= 3)
          throw divergence_error("printed J-series diverges (growing terms)");
      } else {
        grow = 0;
      }
      if (mag <= std::max(pol.abs_tol,
                          pol.rel_tol * (std::abs(j1) + std::abs(j2) + std::abs(j3)))) {
        if (++small_run >= 2) {
          done = true;
          break;
        }
      } else {
        small_run = 0;
      }
      prev = mag;
    }
  }
  if (!done) throw truncation_error("printed J-series: term budget exhausted");
  const double lam2 = pref1 * pref1 * j1 + pref2 * pref2 * j2 + pref1 * pref2 * j3;
  if (lam2 < 0.0)
    throw domain_error("printed J-series: negative value under square root");
  return std::sqrt(lam2);
}

} // namespace printed

// Exact closed-form lambda_k from the reconciled profile formulas: Beta sums
// where the series terminate, 1D quadrature of the closed profile otherwise.
// This is the variant that actually reproduces the oracle; the table's
// "closed" column stays faithful to the printed series (below) and this one
// is recorded in the ledger.
inline double singular_value_reconstructed(const spectral_params& p, basis_index k) {
  p.validate();
  k.validate();
  double lam2;
  if (p.m >= 1 && k.k > p.m)
    lam2 = detail::lambda2_beta_upper(p, k.k);
  else if (p.m >= 1 && k.k == p.m)
    lam2 = detail::lambda2_beta_diag(p);
  else
    lam2 = detail::lambda2_profile_quadrature(p, k.k);
  return std::sqrt(lam2);
}

// ---------------------------------------------------------------------------
// Flagged closed evaluation
// ---------------------------------------------------------------------------
enum class closed_flag { valid, invalid };

struct closed_value {
  double value = std::numeric_limits<double>::quiet_NaN();  // printed series
  bool has_value = false;
  closed_flag flag = closed_flag::invalid;
  double rel_residual = std::numeric_limits<double>::quiet_NaN();
  std::string note;  // "evaluated" or the error that blocked evaluation
};

// The printed series verbatim, flagged by oracle comparison (VALID iff the
// relative difference is < 1e-4).  Pole and divergence errors become the
// flag, never a crash.
inline closed_value singular_value_closed(const spectral_params& p, basis_index k,
                                          const truncation_policy& pol,
                                          double lambda_oracle) {
  p.validate();
  k.validate();
  pol.validate();
  closed_value out;
  try {
    out.value = printed::singular_value(p, k, pol);
    out.has_value = std::isfinite(out.value);
    out.note = out.has_value ? "evaluated" : "non-finite value";
  } catch (const error& e) {
    out.note = e.what();
  }
  if (out.has_value && lambda_oracle > 0.0) {
    out.rel_residual = std::abs(out.value - lambda_oracle) / lambda_oracle;
    out.flag = (out.rel_residual < 1e-4) ? closed_flag::valid : closed_flag::invalid;
  }
  return out;
}

// Spec'd two-argument form: the validity flag needs an oracle, so this
// overload computes one on a fixed default rule.
inline closed_value singular_value_closed(const spectral_params& p, basis_index k,
                                          const truncation_policy& pol = {}) {
  const disk_quadrature q = build_disk_rule(48, 64);
  return singular_value_closed(p, k, pol, singular_value_oracle(p, k, q));
}

// ---------------------------------------------------------------------------
// Image Gram, certification, fit, table
// ---------------------------------------------------------------------------

// <L Phi_j, L Phi_k> for j,k <= jmax, row-major.  Radial factors come from
// the numerical transform at the rule's radial nodes; the angular factor is
// the literal discrete sum over the rule's angles.
inline std::vector<std::complex<double>> image_gram(const spectral_params& p, int jmax,
                                                    const disk_quadrature& q) {
  p.validate();
  if (jmax < 0) throw size_error("image_gram: jmax must be >= 0");
  const int n = jmax + 1;
  std::vector<int> modes(n);
  for (int j = 0; j < n; ++j) modes[j] = j - p.m;
  std::vector<std::vector<double>> prof(q.n_radial, std::vector<double>(n, 0.0));
  for (int i = 0; i < q.n_radial; ++i) {
    radial_transform_table tab(std::sqrt(q.t[i]), p, q, modes);
    for (int j = 0; j < n; ++j)
      prof[i][j] = tab.profile(j, [&](double r, double t) {
        return normalization(p, basis_index{j}) * radial_phi(p, basis_index{j}, r, t);
      });
  }
  // discrete angular moments (2pi/na) sum_l e^{i dj theta_l}
  std::vector<std::complex<double>> ang(2 * jmax + 1);
  for (int dj = -jmax; dj <= jmax; ++dj) {
    std::complex<double> s{0.0, 0.0};
    for (int l = 0; l < q.n_angular; ++l)
      s += std::polar(1.0, dj * 2.0 * pi_v * l / q.n_angular);
    ang[dj + jmax] = s * (2.0 * pi_v / q.n_angular);
  }
  std::vector<std::complex<double>> g(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double rad = 0.0;
      for (int i = 0; i < q.n_radial; ++i)
        rad += q.wt[i] * std::pow(1.0 - q.t[i], 2.0 * p.nu - 2.0) * prof[i][j] *
               prof[i][k];
      g[static_cast<std::size_t>(j) * n + k] = 0.5 * rad * ang[j - k + jmax];
    }
  return g;
}

// Richardson certification: doubling both resolutions must leave every
// lambda_k unchanged to rel_tol.
struct certification {
  bool passed = false;
  double worst_rel = 0.0;
};

inline certification certify_quadrature(const spectral_params& p, const disk_quadrature& q,
                                        int kmax = 5, double rel_tol = 1e-8) {
  std::vector<int> ks;
  for (int k = 0; k <= kmax; ++k) ks.push_back(k);
  const std::vector<double> lam = singular_values_oracle(p, ks, q);
  const disk_quadrature q2 = build_disk_rule(2 * q.n_radial, 2 * q.n_angular);
  const std::vector<double> lam2 = singular_values_oracle(p, ks, q2);
  certification out;
  for (std::size_t i = 0; i < ks.size(); ++i)
    out.worst_rel = std::max(out.worst_rel, std::abs(lam[i] - lam2[i]) / lam2[i]);
  out.passed = out.worst_rel < rel_tol;
  return out;
}

struct fit_result {
  double slope = 0.0;
  double constant = 0.0;  // exp(intercept)
};

inline fit_result fit_power_law(const std::vector<double>& xs,
                                const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw range_error("fit_power_law: need at least two samples");
  double sx = 0.0, sy = 0.0;
  const double n = static_cast<double>(xs.size());
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0 && ys[i] > 0.0))
      throw range_error("fit_power_law: samples must be positive");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  fit_result out;
  out.slope = sxy / sxx;
  out.constant = std::exp(my - out.slope * mx);
  return out;
}

struct spectrum_row {
  int k = 0;
  double lambda_oracle = 0.0;
  bool has_closed = false;
  double lambda_closed = std::numeric_limits<double>::quiet_NaN();
  bool valid = false;
  double rel_residual = std::numeric_limits<double>::quiet_NaN();
  std::string note;
};

struct fit_block {
  bool present = false;
  double slope = 0.0;
  double constant = 0.0;
  int k_min = 0;
  int k_max = 0;
};

struct spectrum_table {
  spectral_params params;
  std::vector<spectrum_row> rows;
  fit_block fit;
  void validate() const {
    params.validate();
    int prev = -1;
    for (const auto& r : rows) {
      if (r.k <= prev) throw range_error("spectrum_table: rows must be sorted, unique");
      if (!(r.lambda_oracle >= 0.0))
        throw range_error("spectrum_table: lambda_oracle must be >= 0");
      prev = r.k;
    }
  }
};

inline fit_result asymptotic_fit(const spectrum_table& t, int k_min, int k_max) {
  if (k_min < 10) throw range_error("asymptotic_fit: k_min must be >= 10");
  if (k_max < k_min) throw range_error("asymptotic_fit: empty range");
  std::vector<double> xs, ys;
  for (const auto& r : t.rows)
    if (r.k >= k_min && r.k <= k_max) {
      xs.push_back(static_cast<double>(r.k));
      ys.push_back(r.lambda_oracle);
    }
  if (static_cast<int>(xs.size()) != k_max - k_min + 1)
    throw range_error("asymptotic_fit: table lacks rows in the fit range");
  return fit_power_law(xs, ys);
}

inline spectrum_table build_spectrum_table(const spectral_params& p, int kmax,
                                           const disk_quadrature& q,
                                           const truncation_policy& pol = {}) {
  p.validate();
  if (kmax < 0) throw size_error("build_spectrum_table: kmax must be >= 0");
  spectrum_table t;
  t.params = p;
  std::vector<int> ks;
  for (int k = 0; k <= kmax; ++k) ks.push_back(k);
  const std::vector<double> lam = singular_values_oracle(p, ks, q);
  for (int k = 0; k <= kmax; ++k) {
    const closed_value cv = singular_value_closed(p, basis_index{k}, pol, lam[k]);
    spectrum_row row;
    row.k = k;
    row.lambda_oracle = lam[k];
    row.has_closed = cv.has_value;
    row.lambda_closed = cv.value;
    row.valid = cv.has_value && cv.flag == closed_flag::valid;
    row.rel_residual = cv.rel_residual;
    row.note = cv.note;
    t.rows.push_back(row);
  }
  if (kmax >= 50) {
    const fit_result f = asymptotic_fit(t, 50, kmax);
    t.fit.present = true;
    t.fit.slope = f.slope;
    t.fit.constant = f.constant;
    t.fit.k_min = 50;
    t.fit.k_max = kmax;
  }
  t.validate();
  return t;
}

// Ledger lines recording the printed-vs-recomputed arbitration for the
// singular-value series.
inline std::vector<ledger_entry> spectrum_ledger(const spectral_params& p,
                                                 const disk_quadrature& q,
                                                 const truncation_policy& pol = {}) {
  std::vector<ledger_entry> out;
  out.push_back({"spectrum.A_n.reading",
                 "Cauchy coefficient of the squared 2F1 (printed form keeps a single "
                 "1/n! in place of 1/(i!(n-i)!))"});
  out.push_back({"spectrum.B_n.reading",
                 "single Cauchy coefficient of the squared diagonal 3F2 (printed "
                 "definition is self-indexed)"});
  out.push_back({"spectrum.J1.printed_gamma_args",
                 "Gamma(2n+2k-2m+5) Gamma(4nu-2m-1) / Gamma(2n+2k-4m+4nu+6)"});
  out.push_back({"spectrum.J1.beta_recomputed_args",
                 "(1/2) B(n+k-m+3, 4nu-2m-1) from the printed I3^2 integrand"});
  const int refs[3] = {p.m, p.m + 1, p.m + 5};
  char kb[96];
  for (int k : refs) {
    const double lam = singular_value_oracle(p, basis_index{k}, q);
    const closed_value cv = singular_value_closed(p, basis_index{k}, pol, lam);
    std::snprintf(kb, sizeof kb, "spectrum.lambda.k%d.oracle", k);
    out.push_back({kb, detail::fmt_sci(lam)});
    std::snprintf(kb, sizeof kb, "spectrum.lambda.k%d.printed", k);
    out.push_back({kb, cv.has_value ? detail::fmt_sci(cv.value)
                                    : "error(" + cv.note + ")"});
    if (cv.has_value) {
      std::snprintf(kb, sizeof kb, "spectrum.lambda.k%d.printed.rel", k);
      out.push_back({kb, detail::fmt_sci(cv.rel_residual)});
    }
    std::snprintf(kb, sizeof kb, "spectrum.lambda.k%d.printed_beta_args", k);
    try {
      const double pb = printed::singular_value_beta_args(p, basis_index{k}, pol);
      out.push_back({kb, detail::fmt_sci(pb)});
      std::snprintf(kb, sizeof kb, "spectrum.lambda.k%d.printed_beta_args.rel", k);
      out.push_back({kb, detail::fmt_sci(std::abs(pb - lam) / lam)});
    } catch (const error& e) {
      out.push_back({kb, std::string("error(") + e.what() + ")"});
    }
    std::snprintf(kb, sizeof kb, "spectrum.lambda.k%d.reconstructed", k);
    try {
      const double rv = singular_value_reconstructed(p, basis_index{k});
      out.push_back({kb, detail::fmt_sci(rv)});
      std::snprintf(kb, sizeof kb, "spectrum.lambda.k%d.reconstructed.rel", k);
      out.push_back({kb, detail::fmt_sci(std::abs(rv - lam) / lam)});
    } catch (const error& e) {
      out.push_back({kb, std::string("error(") + e.what() + ")"});
    }
  }
  out.push_back({"spectrum.lambda.match",
                 "reconstructed (printed J-series omit the (1-t)^{2nu-2} weight and "
                 "the 2 pi (pi gamma/(2(k-m)))^2 normalization)"});
  return out;
}

} // namespace logpot
