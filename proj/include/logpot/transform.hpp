#pragma once

// Closed-form action of the log-potential transform on basis elements.
//
// The action factorizes as L[Phi_k](rho e^{it}) = e^{i(k-m)t} * radial(rho).
// The source derivation reaches the radial factor through four integrals
// I1..I4 but prints several mutually inconsistent versions of the final
// formulas (argument rho^2 vs 1-rho^2, shifted hypergeometric parameters,
// dropped prefactors).  The forms used by radial_action_* below are the
// rederived ones that survive oracle arbitration; reconcile_transform()
// reruns that arbitration against transform_numeric, for the rederived
// forms and for every printed variant, and reports the residuals as a
// machine-readable ledger.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "logpot/basis.hpp"
#include "logpot/errors.hpp"
#include "logpot/params.hpp"
#include "logpot/quadrature.hpp"
#include "logpot/specfun.hpp"

namespace logpot {

// Connection coefficient alpha_k^{nu,m} = 2 Gamma(2(m-nu)+1) / (m! Gamma(2+m-2nu)).
// For admissible (nu, m) with 2nu an integer both Gamma arguments are
// non-positive integers simultaneously and the ratio is interpreted as the
// (finite) limit Gamma(-p+eps)/Gamma(-q+eps) -> (-1)^{p+q} q!/p!.  A pole in
// the numerator alone is a genuine singularity.
// (Level bounds are deliberately not enforced here: the coefficient is a
// meaningful Gamma ratio for any m >= 0, and is probed off-range in tests.)
inline double coeff_alpha(const spectral_params& p) {
  if (p.m < 0) throw parameter_error("coeff_alpha: m must be >= 0");
  const double anum = 2.0 * (p.m - p.nu) + 1.0;
  const double aden = 2.0 + p.m - 2.0 * p.nu;
  const bool num_pole = is_nonpositive_integer(anum);
  const bool den_pole = is_nonpositive_integer(aden);
  double mfact = 1.0;
  for (int i = 2; i <= p.m; ++i) mfact *= i;
  if (num_pole && den_pole) {
    const long long pp = static_cast<long long>(std::llround(-anum));
    const long long qq = static_cast<long long>(std::llround(-aden));
    double ratio = 1.0;
    if (qq >= pp)
      for (long long j = pp + 1; j <= qq; ++j) ratio *= static_cast<double>(j);
    else
      for (long long j = qq + 1; j <= pp; ++j) ratio /= static_cast<double>(j);
    if ((pp + qq) % 2 != 0) ratio = -ratio;
    return 2.0 * ratio / mfact;
  }
  if (num_pole) throw pole_error("coeff_alpha: Gamma(2(m-nu)+1) is singular");
  if (den_pole) return 0.0;
  const double s = static_cast<double>(gamma_sign(anum)) * gamma_sign(aden);
  return 2.0 * s * std::exp(ln_gamma(anum) - ln_gamma(aden)) / mfact;
}

namespace detail {

// ∫_0^X (1 - s^q)/(1 - s) ds, q > 0, 0 <= X <= 1.  The integrand is analytic
// on (0,1] with an s^q cusp at 0 (non-integer q), so Gauss-Legendre panels
// graded geometrically towards 0 converge to machine accuracy.
inline double diag_m0_integral(double X, double q) {
  if (X <= 0.0) return 0.0;
  std::vector<double> gx, gw;
  gauss_legendre_01(24, gx, gw);
  double acc = 0.0;
  double hi = X;
  for (int panel = 0; panel < 26; ++panel) {
    const double lo = (panel == 25) ? 0.0 : hi * 0.25;
    for (std::size_t i = 0; i < gx.size(); ++i) {
      const double s = lo + (hi - lo) * gx[i];
      const double num = -std::expm1(q * std::log1p(s - 1.0));  // 1 - s^q
      acc += (hi - lo) * gw[i] * num / (1.0 - s);
    }
    hi = lo;
    if (hi == 0.0) break;
  }
  return acc;
}

// The diagonal branch reproduces the proof's I1/I2 split internally: the
// log(rho^2) terms cancel iff the running integral C(rho) of the level-m
// radial density equals its hypergeometric antiderivative C2(rho).  Checked
// numerically on every call.
inline void assert_diag_log_cancellation(const spectral_params& p, double rho) {
  const double rho2 = rho * rho;
  const double X = 1.0 - rho2;
  std::vector<double> gx, gw;
  gauss_legendre_01(96, gx, gw);
  double c = 0.0;
  for (std::size_t i = 0; i < gx.size(); ++i) {
    const double t = rho2 * gx[i];
    c += rho2 * gw[i] * std::pow(1.0 - t, 2.0 * p.nu - p.m - 2.0) *
         jacobi_p(p.m, 0.0, 2.0 * (p.nu - p.m) - 1.0, 1.0 - 2.0 * t);
  }
  double c2;
  if (p.m == 0)
    c2 = (1.0 - std::pow(X, 2.0 * p.nu - 1.0)) / (2.0 * p.nu - 1.0);
  else
    c2 = rho2 * std::pow(X, 2.0 * p.nu - p.m - 1.0) *
         gauss_2f1(1.0 - p.m, 2.0 * p.nu - p.m, 2.0, rho2);
  if (std::abs(c - c2) > 1e-12 * std::max(1.0, std::abs(c)))
    throw error("radial_action_diag: log-cancellation assertion failed");
}

} // namespace detail

// k = m branch.  radial(rho) = gamma_m (pi/2) K(1-rho^2) with
//   K(X) = (alpha/(2(2nu-m))) X^{2nu-m} 3F2(1-m, 2nu-m, 2nu-m; 2(nu-m), 2nu-m+1 | X)
// for m >= 1 (terminating), and the m = 0 limit
//   K(X) = (1/(2nu-1)) ∫_0^X (1-s^{2nu-1})/(1-s) ds
// (the printed 3F2 does not terminate at m = 0; the integral form is what the
// oracle confirms).
inline double radial_action_diag(const spectral_params& p, double rho) {
  p.validate();
  if (!(rho > 0.0 && rho < 1.0))
    throw domain_error("radial_action_diag: rho must be in (0,1)");
  detail::assert_diag_log_cancellation(p, rho);
  const double X = 1.0 - rho * rho;
  double kval;
  if (p.m == 0) {
    kval = detail::diag_m0_integral(X, 2.0 * p.nu - 1.0) / (2.0 * p.nu - 1.0);
  } else {
    const double a = coeff_alpha(p);
    kval = a / (2.0 * (2.0 * p.nu - p.m)) * std::pow(X, 2.0 * p.nu - p.m) *
           hyp_3f2(1.0 - p.m, 2.0 * p.nu - p.m, 2.0 * p.nu - p.m,
                   2.0 * (p.nu - p.m), 2.0 * p.nu - p.m + 1.0, X);
  }
  return normalization(p, basis_index{p.m}) * 0.5 * pi_v * kval;
}

// k != m branch: radial(rho) = gamma_k (pi/(2|k-m|)) (I3 + I4).
// For k > m:
//   I3 = [(1+d)_m/(m!(d+1))] rho^{d+2} X^{2nu-m-1} 2F1(1-m, 2(nu-m)+k; 2+d | rho^2)
//   I4 = [(-1)^m (2(nu-m))_m/(m!(2nu-m-1))] rho^d X^{2nu-m-1}
//            3F2(-m, 2(nu-m)+k, 2nu-m-1; 2(nu-m), 2nu-m | X)
// with d = k-m.  At m = 0 the I3 kernel 2F1(1, 2nu+k; 2+k | rho^2) does not
// terminate; the Euler transform X^{1-2nu} 2F1(1+k, 2-2nu; 2+k | rho^2) is
// used instead (terminating for 2nu integer, and safely summable otherwise).
// For k < m the Szegoe symmetrization maps to the k > m integrals; the upper
// piece splits as rho^{-d} (T - M3) with a Beta-function constant T, and
//   I4 = rho^d [(-1)^k (2(nu-m))_k/(k!(2nu-m-1))] X^{2nu-m-1}
//            3F2(-k, 2nu-m, 2nu-m-1; 2(nu-m), 2nu-m | X).
inline double radial_action_offdiag(const spectral_params& p, basis_index k, double rho) {
  p.validate();
  k.validate();
  if (k.k == p.m) throw parameter_error("radial_action_offdiag: k must differ from m");
  if (!(rho > 0.0 && rho < 1.0))
    throw domain_error("radial_action_offdiag: rho must be in (0,1)");
  const double nu = p.nu;
  const int m = p.m;
  const double rho2 = rho * rho;
  const double X = 1.0 - rho2;
  const double xw = std::pow(X, 2.0 * nu - m - 1.0);
  const int d = std::abs(k.k - m);
  double mfact = 1.0;
  for (int i = 2; i <= m; ++i) mfact *= i;
  double i3, i4;
  if (k.k > m) {
    double f3;
    if (m == 0)
      f3 = std::pow(X, 1.0 - 2.0 * nu) *
           gauss_2f1(1.0 + k.k, 2.0 - 2.0 * nu, 2.0 + k.k, rho2);
    else
      f3 = gauss_2f1(1.0 - m, 2.0 * (nu - m) + k.k, 2.0 + d, rho2);
    const double c3 = pochhammer(1.0 + d, m) / (mfact * (d + 1.0));
    i3 = c3 * std::pow(rho, d + 2) * xw * f3;
    const double c4 = ((m % 2 == 0) ? 1.0 : -1.0) * pochhammer(2.0 * (nu - m), m) /
                      (mfact * (2.0 * nu - m - 1.0));
    i4 = c4 * std::pow(rho, d) * xw *
         hyp_3f2(-static_cast<double>(m), 2.0 * (nu - m) + k.k, 2.0 * nu - m - 1.0,
                 2.0 * (nu - m), 2.0 * nu - m, X);
  } else {
    double kfact = 1.0;
    for (int i = 2; i <= k.k; ++i) kfact *= i;
    const double c4p = ((k.k % 2 == 0) ? 1.0 : -1.0) * pochhammer(2.0 * (nu - m), k.k) /
                       (kfact * (2.0 * nu - m - 1.0));
    i4 = std::pow(rho, d) * c4p * xw *
         hyp_3f2(-static_cast<double>(k.k), 2.0 * nu - m, 2.0 * nu - m - 1.0,
                 2.0 * (nu - m), 2.0 * nu - m, X);
    const double m3 = c4p * xw *
                      hyp_3f2(-static_cast<double>(m), 2.0 * (nu - m) + k.k,
                              2.0 * nu - m - 1.0, 2.0 * (nu - m), 2.0 * nu - m, X);
    const double tconst = pochhammer(1.0 + d, k.k) / kfact *
                          beta_ab(d + 1.0, 2.0 * nu - m - 1.0) * pochhammer(d, k.k) /
                          pochhammer(d + 2.0 * nu - m, k.k);
    i3 = std::pow(rho, -d) * (tconst - m3);
  }
  return normalization(p, k) * pi_v / (2.0 * d) * (i3 + i4);
}

// Assembled action: e^{i(k-m) arg z} times the radial factor.
inline std::complex<double> full_action(const spectral_params& p, basis_index k,
                                        std::complex<double> z) {
  p.validate();
  k.validate();
  const double rho = std::abs(z);
  if (rho >= 1.0) throw domain_error("full_action: |z| must be < 1");
  if (rho == 0.0) {
    if (k.k != p.m) return {0.0, 0.0};
    // diagonal value at the origin: gamma_m (pi/2) K(1)
    const spectral_params& q = p;
    double kval;
    if (q.m == 0)
      kval = detail::diag_m0_integral(1.0, 2.0 * q.nu - 1.0) / (2.0 * q.nu - 1.0);
    else
      kval = coeff_alpha(q) / (2.0 * (2.0 * q.nu - q.m)) *
             hyp_3f2(1.0 - q.m, 2.0 * q.nu - q.m, 2.0 * q.nu - q.m,
                     2.0 * (q.nu - q.m), 2.0 * q.nu - q.m + 1.0, 1.0);
    return {normalization(q, basis_index{q.m}) * 0.5 * pi_v * kval, 0.0};
  }
  const double radial = (k.k == p.m) ? radial_action_diag(p, rho)
                                     : radial_action_offdiag(p, k, rho);
  const int n = k.k - p.m;
  return std::polar(1.0, n * std::arg(z)) * radial;
}

// Sampled radial profile of L[Phi_k].
struct radial_profile {
  std::vector<double> rho;
  std::vector<double> value;
  void validate() const {
    if (rho.size() != value.size()) throw size_error("radial_profile: ragged samples");
    double prev = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
      if (!(rho[i] > prev && rho[i] < 1.0))
        throw range_error("radial_profile: rho samples must be increasing in (0,1)");
      if (!std::isfinite(value[i])) throw range_error("radial_profile: non-finite value");
      prev = rho[i];
    }
  }
};

inline radial_profile sample_closed_profile(const spectral_params& p, basis_index k,
                                            const std::vector<double>& rhos) {
  radial_profile out;
  out.rho = rhos;
  out.value.reserve(rhos.size());
  for (double r : rhos)
    out.value.push_back(k.k == p.m ? radial_action_diag(p, r)
                                   : radial_action_offdiag(p, k, r));
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Printed variants, implemented verbatim for the reconciliation pass.
// arg_is_X selects the hypergeometric argument 1-rho^2 instead of rho^2
// (the source alternates between the two).
// ---------------------------------------------------------------------------
namespace printed {

// k = m: (alpha/(2(2nu-m+1))) sqrt((2(nu-m)-1)/pi) X^{2nu-m-1}
//        3F2(-m+1, 2nu-m, 2nu-m+1; 2(nu-m), 2nu-m+2 | arg)
inline double diag(const spectral_params& p, double rho, bool arg_is_X,
                   const truncation_policy& pol = {}) {
  const double X = 1.0 - rho * rho;
  const double arg = arg_is_X ? X : rho * rho;
  return coeff_alpha(p) / (2.0 * (2.0 * p.nu - p.m + 1.0)) *
         std::sqrt((2.0 * (p.nu - p.m) - 1.0) / pi_v) *
         std::pow(X, 2.0 * p.nu - p.m - 1.0) *
         hyp_3f2(1.0 - p.m, 2.0 * p.nu - p.m, 2.0 * p.nu - p.m + 1.0,
                 2.0 * (p.nu - p.m), 2.0 * p.nu - p.m + 2.0, arg, pol);
}

// k != m, statement form: (pi gamma_k / (2(k-m))) (I3 + I4) with
//   I3 = [(1+k-m)_m/(m!(k-m+1))] rho^{k-m+2} X^{2nu-m-1}
//            2F1(-m+1, 2(nu-m)+k; 2+k-m | arg)
//   I4 = [alpha/(2nu-m-1)] X^{2nu-m-1} 2F1(-m+1, 2nu-m-1; 2(nu-m) | arg)
inline double offdiag_theorem(const spectral_params& p, basis_index k, double rho,
                              bool arg_is_X, const truncation_policy& pol = {}) {
  const double nu = p.nu;
  const int m = p.m;
  const double X = 1.0 - rho * rho;
  const double arg = arg_is_X ? X : rho * rho;
  const double xw = std::pow(X, 2.0 * nu - m - 1.0);
  double mfact = 1.0;
  for (int i = 2; i <= m; ++i) mfact *= i;
  const double i3 = pochhammer(1.0 + k.k - m, m) / (mfact * (k.k - m + 1.0)) *
                    std::pow(rho, k.k - m + 2) * xw *
                    gauss_2f1(1.0 - m, 2.0 * (nu - m) + k.k, 2.0 + k.k - m, arg, pol);
  const double i4 = coeff_alpha(p) / (2.0 * nu - m - 1.0) * xw *
                    gauss_2f1(1.0 - m, 2.0 * nu - m - 1.0, 2.0 * (nu - m), arg, pol);
  return normalization(p, k) * pi_v / (2.0 * (k.k - m)) * (i3 + i4);
}

// k != m, proof form: same I3, but
//   I4 = [rho^{k-m}(1+k-m)_m/(2 m!)] [alpha/(2nu-m-1)] X^{2nu-m-1}
//            2F1(-m+1, 2nu-m-1; 2(nu-m) | arg)
// (the proof's 3F2 collapses to this 2F1 by the repeated-parameter identity).
inline double offdiag_proof(const spectral_params& p, basis_index k, double rho,
                            bool arg_is_X, const truncation_policy& pol = {}) {
  const double nu = p.nu;
  const int m = p.m;
  const double X = 1.0 - rho * rho;
  const double arg = arg_is_X ? X : rho * rho;
  const double xw = std::pow(X, 2.0 * nu - m - 1.0);
  double mfact = 1.0;
  for (int i = 2; i <= m; ++i) mfact *= i;
  const double i3 = pochhammer(1.0 + k.k - m, m) / (mfact * (k.k - m + 1.0)) *
                    std::pow(rho, k.k - m + 2) * xw *
                    gauss_2f1(1.0 - m, 2.0 * (nu - m) + k.k, 2.0 + k.k - m, arg, pol);
  const double i4 = std::pow(rho, k.k - m) * pochhammer(1.0 + k.k - m, m) /
                    (2.0 * mfact) * coeff_alpha(p) / (2.0 * nu - m - 1.0) * xw *
                    gauss_2f1(1.0 - m, 2.0 * nu - m - 1.0, 2.0 * (nu - m), arg, pol);
  return normalization(p, k) * pi_v / (2.0 * (k.k - m)) * (i3 + i4);
}

} // namespace printed

// ---------------------------------------------------------------------------
// Reconciliation: score every candidate against the quadrature oracle at the
// probe points k in {m-1 (if m>=1), m, m+1, m+5}, rho in {0.2, 0.5, 0.8}, and
// emit the ledger.  The chosen convention is the rederived one; the ledger
// shows why.
// ---------------------------------------------------------------------------
struct ledger_entry {
  std::string key;
  std::string value;
};

struct reconciliation_result {
  std::vector<ledger_entry> entries;
  bool chosen_ok = false;     // every branch of the rederived forms oracle-valid
  double chosen_worst = 0.0;  // worst rel residual of the rederived forms, all probes
  double core_worst = 0.0;    // same over the 9-point core set (k in {m-1,m,m+1}, or
                              // {0,1,5} at m = 0)
};

namespace detail {

inline std::string fmt_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

} // namespace detail

inline reconciliation_result reconcile_transform(const spectral_params& p,
                                                 const disk_quadrature& q) {
  p.validate();
  std::vector<int> ks;
  if (p.m >= 1) ks.push_back(p.m - 1);
  ks.push_back(p.m);
  ks.push_back(p.m + 1);
  ks.push_back(p.m + 5);
  static const double rhos[3] = {0.2, 0.5, 0.8};
  // The 9-point core set keeps one k per branch; the extra far probe k = m+5
  // stays in the ledger scope only (it can sit on a zero of the profile,
  // where a relative comparison carries no information).
  auto in_core = [&](int k) {
    return p.m == 0 ? (k == 0 || k == 1 || k == 5)
                    : (k == p.m - 1 || k == p.m || k == p.m + 1);
  };

  std::vector<int> modes;
  for (int k : ks) modes.push_back(k - p.m);

  // oracle radial factors at each probe point
  std::vector<std::vector<double>> oracle(3, std::vector<double>(ks.size(), 0.0));
  for (int ri = 0; ri < 3; ++ri) {
    radial_transform_table tab(rhos[ri], p, q, modes);
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      const int k = ks[ki];
      oracle[ri][ki] = tab.profile(ki, [&](double r, double t) {
        return normalization(p, basis_index{k}) * radial_phi(p, basis_index{k}, r, t);
      });
    }
  }

  struct candidate {
    const char* name;
    std::function<double(int, double)> eval;  // (k, rho) -> radial value
  };
  const std::vector<candidate> diag_cands = {
      {"rederived", [&](int, double r) { return radial_action_diag(p, r); }},
      {"printed_arg_X", [&](int, double r) { return printed::diag(p, r, true); }},
      {"printed_arg_rho2", [&](int, double r) { return printed::diag(p, r, false); }},
  };
  const std::vector<candidate> off_cands = {
      {"rederived",
       [&](int k, double r) { return radial_action_offdiag(p, basis_index{k}, r); }},
      {"theorem_arg_rho2",
       [&](int k, double r) { return printed::offdiag_theorem(p, basis_index{k}, r, false); }},
      {"theorem_arg_X",
       [&](int k, double r) { return printed::offdiag_theorem(p, basis_index{k}, r, true); }},
      {"proof_arg_rho2",
       [&](int k, double r) { return printed::offdiag_proof(p, basis_index{k}, r, false); }},
      {"proof_arg_X",
       [&](int k, double r) { return printed::offdiag_proof(p, basis_index{k}, r, true); }},
  };

  reconciliation_result out;
  out.chosen_ok = true;
  char kb[96];

  struct branch_def {
    const char* name;
    bool diag;
    bool lower;  // k < m branch
  };
  std::vector<branch_def> branches = {{"diag", true, false}, {"offdiag_upper", false, false}};
  if (p.m >= 1) branches.push_back({"offdiag_lower", false, true});

  for (const auto& br : branches) {
    const auto& cands = br.diag ? diag_cands : off_cands;
    for (const auto& cand : cands) {
      const bool chosen = std::string(cand.name) == "rederived";
      double worst = 0.0;
      std::string fail;
      int npts = 0, ndegen = 0;
      for (std::size_t ki = 0; ki < ks.size(); ++ki) {
        const int k = ks[ki];
        const bool is_diag = (k == p.m);
        if (br.diag != is_diag) continue;
        if (!br.diag && (k < p.m) != br.lower) continue;
        for (int ri = 0; ri < 3; ++ri) {
          ++npts;
          double v;
          try {
            v = cand.eval(k, rhos[ri]);
          } catch (const error& e) {
            fail = e.what();
            worst = std::numeric_limits<double>::infinity();
            continue;
          }
          if (!std::isfinite(v)) {
            fail = "non-finite value";
            worst = std::numeric_limits<double>::infinity();
            continue;
          }
          if (std::abs(v) <= 1e-12 && std::abs(oracle[ri][ki]) <= 1e-12) {
            // profile vanishes at the probe to double precision; a relative
            // comparison is meaningless there -- record it instead of scoring
            ++ndegen;
            if (chosen) {
              std::snprintf(kb, sizeof kb, "transform.%s.degenerate.k%d.rho%.1f.absdiff",
                            br.name, k, rhos[ri]);
              out.entries.push_back({kb, detail::fmt_sci(std::abs(v - oracle[ri][ki]))});
            }
            continue;
          }
          const double rel =
              std::abs(v - oracle[ri][ki]) / std::max(1e-12, std::abs(oracle[ri][ki]));
          worst = std::max(worst, rel);
          if (chosen && in_core(k)) out.core_worst = std::max(out.core_worst, rel);
        }
      }
      std::snprintf(kb, sizeof kb, "transform.%s.candidate.%s.max_rel", br.name, cand.name);
      out.entries.push_back({kb, fail.empty() ? detail::fmt_sci(worst)
                                              : "error(" + fail + ")"});
      if (chosen) {
        std::snprintf(kb, sizeof kb, "transform.%s.points", br.name);
        out.entries.push_back({kb, std::to_string(npts)});
        if (ndegen > 0) {
          std::snprintf(kb, sizeof kb, "transform.%s.degenerate_points", br.name);
          out.entries.push_back({kb, std::to_string(ndegen)});
        }
        std::snprintf(kb, sizeof kb, "transform.%s.chosen", br.name);
        out.entries.push_back({kb, "rederived"});
        const bool valid = fail.empty() && worst < 1e-6;
        std::snprintf(kb, sizeof kb, "transform.%s.valid", br.name);
        out.entries.push_back({kb, valid ? "1" : "0"});
        out.chosen_worst = std::max(out.chosen_worst, worst);
        if (!valid) out.chosen_ok = false;
      }
    }
  }
  // Boundary decay: the stated X^{2nu-m-1} prefactor is real, but for m >= 1
  // the bracket it multiplies vanishes linearly at rho = 1 (the leading
  // multipole of L Phi_k cancels by Jacobi orthogonality), so the profile
  // actually decays like X^{2nu-m}; for m = 0 the non-terminating 2F1 absorbs
  // the prefactor (diagonal exponent 1, off-diagonal constant limit).
  // Recorded, not patched: the oracle-confirmed closed forms above already
  // carry the true behavior.
  {
    const double x1 = 0.01, x2 = 0.005;
    const double r1 = std::sqrt(1.0 - x1), r2 = std::sqrt(1.0 - x2);
    const double dslope = std::log(std::abs(radial_action_diag(p, r1) /
                                             radial_action_diag(p, r2))) /
                          std::log(x1 / x2);
    const double oslope =
        std::log(std::abs(radial_action_offdiag(p, basis_index{p.m + 1}, r1) /
                          radial_action_offdiag(p, basis_index{p.m + 1}, r2))) /
        std::log(x1 / x2);
    out.entries.push_back({"transform.boundary_decay.stated_exponent",
                           detail::fmt_sci(2.0 * p.nu - p.m - 1.0)});
    out.entries.push_back({"transform.boundary_decay.diag.measured",
                           detail::fmt_sci(dslope)});
    out.entries.push_back({"transform.boundary_decay.offdiag_upper.measured",
                           detail::fmt_sci(oslope)});
  }
  out.entries.push_back({"transform.chosen.max_rel", detail::fmt_sci(out.chosen_worst)});
  out.entries.push_back({"transform.chosen.core_max_rel", detail::fmt_sci(out.core_worst)});
  out.entries.push_back({"transform.chosen.ok", out.chosen_ok ? "1" : "0"});
  return out;
}

} // namespace logpot
