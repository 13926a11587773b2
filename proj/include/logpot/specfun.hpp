#pragma once

// Scalar special functions used by the basis / transform / spectrum layers:
// log-gamma with explicit sign tracking, reciprocal gamma (entire), rising
// factorials, Jacobi polynomials, and truncated hypergeometric sums 2F1 / 3F2.
//
// Everything here is plain double precision and strictly deterministic: fixed
// evaluation order, no tables filled lazily, no hidden state.

#include <cmath>
#include <cstddef>
#include <string>

#include "logpot/errors.hpp"

namespace logpot {

// Stopping rule for the hypergeometric series. A series is accepted once two
// consecutive terms fall below max(abs_tol, rel_tol * |partial sum|); it is
// rejected with truncation_error after max_terms. Terminating series (a
// numerator parameter a non-positive integer) are summed exactly and ignore
// the tolerances.
struct truncation_policy {
  std::size_t max_terms = 10000;
  double abs_tol = 1e-15;
  double rel_tol = 1e-13;

  void validate() const {
    if (max_terms < 1)
      throw parameter_error("truncation_policy: max_terms must be >= 1");
    if (!(abs_tol > 0.0) && !(rel_tol > 0.0))
      throw parameter_error("truncation_policy: need abs_tol > 0 or rel_tol > 0");
    if (abs_tol < 0.0 || rel_tol < 0.0)
      throw parameter_error("truncation_policy: tolerances must be >= 0");
  }
};

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// log |Gamma(x)|.  Poles of Gamma are rejected; use reciprocal_gamma when a
// zero at the poles is the desired continuation.
inline double ln_gamma(double x) {
  if (is_nonpositive_integer(x))
    throw pole_error("ln_gamma: pole at x = " + std::to_string(x));
  return std::lgamma(x);
}

// Sign of Gamma(x): +1 for x > 0, alternating on the negative axis.
inline int gamma_sign(double x) {
  if (is_nonpositive_integer(x))
    throw pole_error("gamma_sign: pole at x = " + std::to_string(x));
  if (x > 0.0) return 1;
  // Gamma is negative on (-1,0), positive on (-2,-1), ...
  return (static_cast<long long>(std::ceil(-x)) % 2 == 0) ? 1 : -1;
}

// 1/Gamma(x), entire: exactly zero at x = 0, -1, -2, ...
inline double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return gamma_sign(x) * std::exp(-std::lgamma(x));
}

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.  Exact zero when a
// is a non-positive integer with -a < n.  n must be >= 0.
inline double pochhammer(double a, int n) {
  if (n < 0) throw parameter_error("pochhammer: n must be >= 0");
  double p = 1.0;
  for (int i = 0; i < n; ++i) {
    const double f = a + i;
    if (f == 0.0) return 0.0;
    p *= f;
  }
  return p;
}

// Euler Beta B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b).
inline double beta_ab(double a, double b) {
  const double s = static_cast<double>(gamma_sign(a)) * gamma_sign(b) / gamma_sign(a + b);
  return s * std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

// Jacobi polynomial P_n^{(alpha,beta)}(x).
//
// For generic parameters this uses the pole-free expansion
//   P_n^{(a,b)}(x) = sum_i (a+i+1)_{n-i} (n+a+b+1)_i / (i! (n-i)!) ((x-1)/2)^i,
// which is the terminating 2F1 sum with the (1+a)_n prefactor distributed
// through the terms, so a negative non-integer alpha costs nothing.
//
// When 1+alpha is a non-positive integer the leading coefficient degenerates
// and the value is routed through the index symmetry
//   Gamma(n+1)/Gamma(n-s+1) P_n^{(-s,b)} =
//     Gamma(n+b+1)/Gamma(n-s+b+1) ((x-1)/2)^s P_{n-s}^{(s,b)},  1 <= s <= n,
// rather than through analytic continuation of the sum.  If s > n both forms
// are degenerate and we refuse.
inline double jacobi_p(int n, double alpha, double beta, double x) {
  if (n < 0) throw parameter_error("jacobi_p: degree must be >= 0");
  if (n == 0) return 1.0;

  if (alpha <= -1.0 && alpha == std::floor(alpha)) {
    const int s = static_cast<int>(-alpha);
    if (s > n)
      throw parameter_error(
          "jacobi_p: alpha = " + std::to_string(alpha) +
          " with degree " + std::to_string(n) +
          ": both the direct sum and the symmetrized form are degenerate");
    // factor = [ (n-s)! / n! ] * [ Gamma(n+beta+1) / Gamma(n-s+beta+1) ]
    const double num = pochhammer(n - s + beta + 1.0, s);
    const double den = pochhammer(static_cast<double>(n - s + 1), s);
    if (den == 0.0) throw parameter_error("jacobi_p: degenerate index shift");
    const double half = 0.5 * (x - 1.0);
    double pw = 1.0;
    for (int i = 0; i < s; ++i) pw *= half;
    return (num / den) * pw * jacobi_p(n - s, static_cast<double>(s), beta, x);
  }

  const double half = 0.5 * (x - 1.0);
  const double apb = n + alpha + beta + 1.0;
  double sum = 0.0;
  double ifac = 1.0;  // i!
  double nifac = 1.0; // (n-i)! built below
  // (n-i)! for i = 0 is n!
  for (int i = 2; i <= n; ++i) nifac *= i;
  double pw = 1.0;
  double poch_b = 1.0; // (n+alpha+beta+1)_i
  for (int i = 0; i <= n; ++i) {
    const double poch_a = pochhammer(alpha + i + 1.0, n - i);
    sum += poch_a * poch_b / (ifac * nifac) * pw;
    if (i < n) {
      poch_b *= apb + i;
      ifac *= i + 1.0;
      nifac /= n - i;
      pw *= half;
    }
  }
  return sum;
}

namespace detail {

// Shared driver for the truncated hypergeometric sums.  ratio(n) must return
// the factor term_{n+1}/term_n, or set *terminated when the numerator
// parameters have run out, or throw pole_error when a denominator parameter
// hits zero first.
template <class Ratio>
double sum_hypergeometric(Ratio ratio, const truncation_policy& pol,
                          const char* who) {
  pol.validate();
  double term = 1.0;
  double sum = 1.0;
  int small_run = 0;
  // A terminating series is summed to its final term even if that exceeds
  // max_terms; the budget only limits genuinely infinite sums.
  for (std::size_t n = 0;; ++n) {
    bool terminated = false;
    const double r = ratio(n, &terminated);
    if (terminated) return sum;
    term *= r;
    sum += term;
    const double tol = std::max(pol.abs_tol, pol.rel_tol * std::abs(sum));
    if (std::abs(term) <= tol) {
      if (++small_run >= 2) return sum;
    } else {
      small_run = 0;
    }
    if (n + 1 >= pol.max_terms)
      throw truncation_error(std::string(who) +
                             ": series did not settle within " +
                             std::to_string(pol.max_terms) + " terms");
  }
}

inline bool will_terminate(double a) { return is_nonpositive_integer(a); }

inline double series_2f1(double a, double b, double c, double x,
                         const truncation_policy& pol) {
  const bool term_a = will_terminate(a);
  const bool term_b = will_terminate(b);
  return sum_hypergeometric(
      [&](std::size_t n, bool* terminated) {
        const double an = a + static_cast<double>(n);
        const double bn = b + static_cast<double>(n);
        if ((term_a && an == 0.0) || (term_b && bn == 0.0)) {
          *terminated = true;
          return 0.0;
        }
        const double cn = c + static_cast<double>(n);
        if (cn == 0.0)
          throw pole_error("gauss_2f1: (c)_n vanished before termination, c = " +
                           std::to_string(c));
        return an * bn / (cn * (static_cast<double>(n) + 1.0)) * x;
      },
      pol, "gauss_2f1");
}

// Product of Gamma(num[i]) / product of Gamma(den[j]) with sign tracking.
// A pole in a denominator makes the ratio zero; a pole in a numerator throws.
inline double gamma_ratio(const double* num, int nn, const double* den, int nd) {
  double lg = 0.0;
  int sign = 1;
  for (int i = 0; i < nn; ++i) {
    lg += ln_gamma(num[i]); // throws pole_error at poles
    sign *= gamma_sign(num[i]);
  }
  for (int j = 0; j < nd; ++j) {
    if (is_nonpositive_integer(den[j])) return 0.0;
    lg -= ln_gamma(den[j]);
    sign *= gamma_sign(den[j]);
  }
  return sign * std::exp(lg);
}

} // namespace detail

// Gauss hypergeometric sum 2F1(a, b; c; x).
//
// Terminating cases (a or b a non-positive integer) are summed exactly for
// any real x.  Non-terminating cases use the plain series for |x| < 0.9; for
// 0.9 <= x < 1 the linear connection formula in 1-x is applied, which
// requires c-a-b to be non-integer (otherwise we refuse rather than patch in
// the logarithmic case); x = 1 is evaluated by the Gauss summation when
// c-a-b > 0.  Everything else diverges.
inline double gauss_2f1(double a, double b, double c, double x,
                        const truncation_policy& pol = {}) {
  if (detail::will_terminate(a) || detail::will_terminate(b))
    return detail::series_2f1(a, b, c, x, pol);
  if (c == b || c == a) {
    // upper/lower cancellation: 2F1(a, b; b; x) = (1-x)^{-a}
    const double other = (c == b) ? a : b;
    if (x < 1.0) return std::pow(1.0 - x, -other);
    throw divergence_error("gauss_2f1: x >= 1 for a non-terminating series");
  }
  if (is_nonpositive_integer(c))
    throw pole_error("gauss_2f1: c is a non-positive integer with non-terminating numerator");

  const double s = c - a - b;
  if (x == 1.0) {
    if (s > 0.0) {
      const double num[] = {c, s};
      const double den[] = {c - a, c - b};
      return detail::gamma_ratio(num, 2, den, 2);
    }
    throw divergence_error("gauss_2f1: x = 1 with c-a-b <= 0");
  }
  if (x >= 1.0 || x <= -1.0)
    throw divergence_error("gauss_2f1: |x| >= 1 for a non-terminating series");
  if (x < 0.9)
    return detail::series_2f1(a, b, c, x, pol);

  // 0.9 <= x < 1: connection formula at argument 1-x.
  if (s == std::floor(s))
    throw divergence_error(
        "gauss_2f1: x >= 0.9 with integer c-a-b; the logarithmic connection "
        "case is not implemented");
  const double y = 1.0 - x;
  const double num1[] = {c, s};
  const double den1[] = {c - a, c - b};
  const double coef1 = detail::gamma_ratio(num1, 2, den1, 2);
  const double num2[] = {c, -s};
  const double den2[] = {a, b};
  const double coef2 = detail::gamma_ratio(num2, 2, den2, 2);
  double out = 0.0;
  if (coef1 != 0.0)
    out += coef1 * detail::series_2f1(a, b, 1.0 - s, y, pol);
  if (coef2 != 0.0)
    out += coef2 * std::pow(y, s) * detail::series_2f1(c - a, c - b, 1.0 + s, y, pol);
  return out;
}

// Truncated 3F2(a1, a2, a3; b1, b2; x).  Same conventions as gauss_2f1; only
// |x| < 1 (or terminating) is supported -- the closed forms in this library
// always terminate, the general series is provided for cross-checks.
inline double hyp_3f2(double a1, double a2, double a3, double b1, double b2,
                      double x, const truncation_policy& pol = {}) {
  const bool t1 = detail::will_terminate(a1);
  const bool t2 = detail::will_terminate(a2);
  const bool t3 = detail::will_terminate(a3);
  if (!(t1 || t2 || t3) && std::abs(x) >= 1.0)
    throw divergence_error("hyp_3f2: |x| >= 1 for a non-terminating series");
  return detail::sum_hypergeometric(
      [&](std::size_t n, bool* terminated) {
        const double n1 = a1 + static_cast<double>(n);
        const double n2 = a2 + static_cast<double>(n);
        const double n3 = a3 + static_cast<double>(n);
        if ((t1 && n1 == 0.0) || (t2 && n2 == 0.0) || (t3 && n3 == 0.0)) {
          *terminated = true;
          return 0.0;
        }
        const double d1 = b1 + static_cast<double>(n);
        const double d2 = b2 + static_cast<double>(n);
        if (d1 == 0.0 || d2 == 0.0)
          throw pole_error("hyp_3f2: denominator parameter vanished before termination");
        return n1 * n2 * n3 / (d1 * d2 * (static_cast<double>(n) + 1.0)) * x;
      },
      pol, "hyp_3f2");
}

} // namespace logpot
