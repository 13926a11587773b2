#pragma once

// Disk quadrature and the numerical transform oracle.
//
// The oracle evaluates L_nu[f](z) = ∫_D f(xi) log(1/|xi-z|) (1-|xi|^2)^{2nu-2} dA
// directly from samples.  Plain tensor rules stall near the kink of the kernel
// at |xi| = |z|, so the radial grid is rebuilt per evaluation point: one panel
// [0, rho^2] ending exactly at the kink, then a geometric ladder of panels
// towards t = 1 (ratio 4), Gauss-Legendre inside each panel.  The angular
// count per ring is chosen a priori from the aliasing decay of the log kernel
// (the n-th Fourier coefficient decays like q^n with q = min(r,rho)/max(r,rho)),
// rounded to a power of two, with the caller's n_angular as the floor.  Rings
// too close to rho for any affordable angular count fall back to the exact
// angular integral of the kernel, which is available per angular mode; this is
// only taken on the pure-mode fast path where the mode is known.
//
// Everything is deterministic: fixed node order, fixed summation order.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "logpot/errors.hpp"
#include "logpot/params.hpp"

namespace logpot {

inline constexpr double pi_v = 3.14159265358979323846264338327950288;

// Gauss-Legendre nodes/weights on [0,1], ascending nodes, weights sum to 1.
// Newton iteration on P_n; standard initial guesses.
inline void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w) {
  if (n < 1) throw size_error("gauss_legendre_01: n must be >= 1");
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(pi_v * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    // nodes symmetric about 0 on [-1,1]; map to [0,1]
    x[i] = 0.5 * (1.0 - z);
    x[n - 1 - i] = 0.5 * (1.0 + z);
    const double wi = 1.0 / ((1.0 - z * z) * pp * pp);
    w[i] = wi;
    w[n - 1 - i] = wi;
  }
}

// Tensor rule on the disk: radial nodes in t = r^2 (Gauss-Legendre on [0,1]),
// n_angular equispaced angles theta_j = 2 pi j / n_angular.
struct disk_quadrature {
  std::vector<double> t;   // radial nodes in t = r^2, ascending
  std::vector<double> wt;  // radial weights, sum 1
  int n_radial = 0;
  int n_angular = 0;
};

inline disk_quadrature build_disk_rule(int n_radial, int n_angular) {
  if (n_radial < 2) throw size_error("build_disk_rule: n_radial must be >= 2");
  if (n_angular < 8 || n_angular % 2 != 0)
    throw size_error("build_disk_rule: n_angular must be even and >= 8");
  disk_quadrature q;
  q.n_radial = n_radial;
  q.n_angular = n_angular;
  gauss_legendre_01(n_radial, q.t, q.wt);
  return q;
}

// <f, g>_nu = ∫_D f conj(g) (1-|xi|^2)^{2nu-2} dA over the tensor rule.
template <class F, class G>
std::complex<double> weighted_inner_product(F&& f, G&& g, const spectral_params& p,
                                            const disk_quadrature& q) {
  p.validate();
  if (q.n_radial < 2 || q.n_angular < 8)
    throw size_error("weighted_inner_product: rule not built");
  std::complex<double> acc{0.0, 0.0};
  for (int i = 0; i < q.n_radial; ++i) {
    const double t = q.t[i];
    const double r = std::sqrt(t);
    const double wgt = q.wt[i] * std::pow(1.0 - t, 2.0 * p.nu - 2.0);
    std::complex<double> ring{0.0, 0.0};
    for (int j = 0; j < q.n_angular; ++j) {
      const double th = 2.0 * pi_v * j / q.n_angular;
      const std::complex<double> xi = std::polar(r, th);
      ring += f(xi) * std::conj(g(xi));
    }
    acc += wgt * ring;
  }
  return acc * (pi_v / static_cast<double>(q.n_angular));
}

// -(1/2pi) ∫_0^{2pi} e^{i n theta} log|rho - r e^{i theta}| dtheta,
// trapezoid with midpoint offset (the offset keeps rho = r integrable), the
// resolution doubled until stable; one Richardson step covers the slowly
// converging rho = r case.
inline std::complex<double> angular_log_integral_numeric(int n, double rho, double r) {
  if (rho < 0.0 || r < 0.0)
    throw domain_error("angular_log_integral_numeric: radii must be >= 0");
  if (rho == 0.0 && r == 0.0)
    throw domain_error("angular_log_integral_numeric: rho = r = 0");
  const double dr2 = (rho - r) * (rho - r);
  int N = 256;
  while (N < 8 * (std::abs(n) + 1)) N *= 2;
  std::complex<double> prev{0.0, 0.0}, cur{0.0, 0.0};
  bool have_prev = false;
  for (; N <= (1 << 20); N *= 2) {
    std::complex<double> s{0.0, 0.0};
    for (int j = 0; j < N; ++j) {
      const double th = (j + 0.5) * 2.0 * pi_v / N;
      const double sh = std::sin(0.5 * th);
      const double d2 = dr2 + 4.0 * rho * r * sh * sh;
      const double lg = 0.5 * std::log(d2);
      s += std::polar(1.0, n * th) * lg;
    }
    prev = cur;
    cur = -s / static_cast<double>(N);
    if (have_prev && std::abs(cur - prev) <= 1e-12 * std::max(1.0, std::abs(cur)))
      return cur;
    have_prev = true;
  }
  return 2.0 * cur - prev;
}

// Closed form of the same integral (the corrected lemma): -log max(rho, r)
// for n = 0, (1/(2|n|)) (min/max)^{|n|} otherwise.  Real because the fixed
// angular origin puts z on the positive axis.
inline double angular_log_integral_closed(int n, double rho, double r) {
  if (rho < 0.0 || r < 0.0)
    throw domain_error("angular_log_integral_closed: radii must be >= 0");
  const double hi = std::max(rho, r);
  const double lo = std::min(rho, r);
  if (n == 0) {
    if (hi == 0.0) throw domain_error("angular_log_integral_closed: rho = r = 0");
    return -std::log(hi);
  }
  const int an = n < 0 ? -n : n;
  if (hi == 0.0) return 0.0;
  return std::pow(lo / hi, an) / (2.0 * an);
}

struct transform_options {
  bool has_mode = false;  // f promised to be g(r) e^{i mode theta}
  int mode = 0;
  double decay_len = 40.0;      // target -log of the angular aliasing error
  int na_cap = 1 << 18;         // largest angular count before closed fallback
  double t_floor = 1e-12;       // first panel end when rho is (near) zero
};

namespace detail {

inline int ceil_pow2(int v) {
  int p = 8;
  while (p < v) p *= 2;
  return p;
}

struct transform_ring {
  double t, r, wt;  // wt includes the panel Jacobian and the 1/2 from dA
  int na = 0;
  bool boundary_layer = false;
};

inline std::vector<transform_ring> build_kink_rings(double rho, const disk_quadrature& q,
                                                    const transform_options& opt,
                                                    int mode_abs) {
  if (!(rho >= 0.0 && rho < 1.0))
    throw domain_error("transform: |z| must be < 1");
  std::vector<double> gx, gw;
  gauss_legendre_01(q.n_radial, gx, gw);
  const double s = std::max(rho * rho, opt.t_floor);
  std::vector<double> edges;
  edges.push_back(0.0);
  edges.push_back(s);
  while (edges.back() < 1.0) edges.push_back(std::min(4.0 * edges.back(), 1.0));

  std::vector<transform_ring> rings;
  rings.reserve((edges.size() - 1) * gx.size());
  for (std::size_t pidx = 0; pidx + 1 < edges.size(); ++pidx) {
    const double a = edges[pidx], b = edges[pidx + 1];
    for (int i = 0; i < q.n_radial; ++i) {
      transform_ring ring;
      ring.t = a + (b - a) * gx[i];
      ring.r = std::sqrt(ring.t);
      ring.wt = (b - a) * gw[i] * 0.5;
      if (rho > 0.0 && ring.r == rho)
        throw singularity_error("transform: evaluation radius collides with a node ring");
      double need = 8.0;
      if (rho > 0.0) {
        const double qq = std::min(ring.r, rho) / std::max(ring.r, rho);
        const double decay = -std::log(qq);
        need = mode_abs + (decay > 0.0 ? opt.decay_len / decay : 1e18);
      }
      if (need > static_cast<double>(opt.na_cap)) {
        ring.boundary_layer = true;
        ring.na = opt.na_cap;
      } else {
        ring.na = ceil_pow2(std::max(q.n_angular, static_cast<int>(std::ceil(need))));
      }
      rings.push_back(ring);
    }
  }
  return rings;
}

} // namespace detail

// Rings + shared log-kernel values for one evaluation radius.  The kernel
// depends only on (rho, ring, relative angle), so one engine serves every
// integrand and every evaluation angle at this radius.
class disk_transform_engine {
 public:
  disk_transform_engine(double rho, const spectral_params& p, const disk_quadrature& q,
                        transform_options opt = {})
      : rho_(rho), params_(p), opt_(opt) {
    p.validate();
    if (q.n_radial < 2 || q.n_angular < 8)
      throw size_error("disk_transform_engine: rule not built");
    rings_ = detail::build_kink_rings(rho, q, opt, opt.has_mode ? std::abs(opt.mode) : 0);
    logs_.resize(rings_.size());
    for (std::size_t i = 0; i < rings_.size(); ++i) {
      const auto& ring = rings_[i];
      if (ring.boundary_layer && opt_.has_mode) continue;  // closed angular form
      auto& lg = logs_[i];
      lg.resize(ring.na);
      // r - rho without cancellation: (t - rho^2)/(r + rho)
      const double dr = (ring.t - rho_ * rho_) / (ring.r + rho_);
      for (int j = 0; j < ring.na; ++j) {
        const double sh = std::sin(pi_v * j / ring.na);
        const double d2 = dr * dr + 4.0 * ring.r * rho_ * sh * sh;
        lg[j] = -0.5 * std::log(d2);
      }
    }
  }

  double rho() const { return rho_; }
  const std::vector<detail::transform_ring>& rings() const { return rings_; }

  // L_nu[f](rho e^{i theta_z}); f sampled at every ring node.
  template <class F>
  std::complex<double> apply(F&& f, double theta_z) const {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < rings_.size(); ++i) {
      const auto& ring = rings_[i];
      const double wgt = ring.wt * std::pow(1.0 - ring.t, 2.0 * params_.nu - 2.0);
      if (ring.boundary_layer && opt_.has_mode) {
        // closed angular integral, valid because f is a pure mode
        const std::complex<double> f0 = f(std::polar(ring.r, theta_z));
        const double ang =
            2.0 * pi_v * angular_log_integral_closed(opt_.mode, rho_, ring.r);
        acc += wgt * ang * f0;
        continue;
      }
      const auto& lg = logs_[i];
      std::complex<double> ring_sum{0.0, 0.0};
      for (int j = 0; j < ring.na; ++j) {
        const double th = theta_z + 2.0 * pi_v * j / ring.na;
        ring_sum += f(std::polar(ring.r, th)) * lg[j];
      }
      acc += wgt * (2.0 * pi_v / ring.na) * ring_sum;
    }
    return acc;
  }

 private:
  double rho_;
  spectral_params params_;
  transform_options opt_;
  std::vector<detail::transform_ring> rings_;
  std::vector<std::vector<double>> logs_;
};

// One-shot oracle evaluation.  When f is a pure angular mode, pass the mode
// through the options so near-kink rings can use the exact angular integral;
// without the hint those rings run the capped trapezoid.
template <class F>
std::complex<double> transform_numeric(F&& f, std::complex<double> z,
                                       const spectral_params& p, const disk_quadrature& q,
                                       transform_options opt = {}) {
  const double rho = std::abs(z);
  const double theta_z = (rho == 0.0) ? 0.0 : std::arg(z);
  disk_transform_engine eng(rho, p, q, opt);
  return eng.apply(f, theta_z);
}

// Batched pure-mode evaluation: cosine moments of the log kernel, per ring,
// for a whole list of angular modes at once.  The log table for a ring is
// computed once and shared by every mode; moments use the Chebyshev
// recurrence cos((n+1)phi) = 2 cos(phi) cos(n phi) - cos((n-1)phi) in the
// mode index.  For a pure mode the sine moments vanish identically (the grid
// and the kernel are even in the relative angle), so only cosines are kept.
class radial_transform_table {
 public:
  radial_transform_table(double rho, const spectral_params& p, const disk_quadrature& q,
                         const std::vector<int>& modes, transform_options opt = {})
      : rho_(rho), params_(p), modes_(modes) {
    p.validate();
    if (q.n_radial < 2 || q.n_angular < 8)
      throw size_error("radial_transform_table: rule not built");
    int mode_abs = 0;
    for (int n : modes) mode_abs = std::max(mode_abs, std::abs(n));
    rings_ = detail::build_kink_rings(rho, q, opt, mode_abs);
    ang_.assign(rings_.size(), std::vector<double>(modes.size(), 0.0));

    std::vector<double> lg;
    std::vector<double> moment(static_cast<std::size_t>(mode_abs) + 1, 0.0);
    for (std::size_t i = 0; i < rings_.size(); ++i) {
      const auto& ring = rings_[i];
      if (ring.boundary_layer) {
        for (std::size_t mi = 0; mi < modes.size(); ++mi)
          ang_[i][mi] = 2.0 * pi_v * angular_log_integral_closed(modes[mi], rho_, ring.r);
        continue;
      }
      lg.assign(ring.na, 0.0);
      const double dr = (ring.t - rho_ * rho_) / (ring.r + rho_);
      for (int j = 0; j < ring.na; ++j) {
        const double sh = std::sin(pi_v * j / ring.na);
        lg[j] = -0.5 * std::log(dr * dr + 4.0 * ring.r * rho_ * sh * sh);
      }
      std::fill(moment.begin(), moment.end(), 0.0);
      for (int j = 0; j < ring.na; ++j) {
        const double phi = 2.0 * pi_v * j / ring.na;
        const double c1 = std::cos(phi);
        double cm1 = 1.0, cm0 = c1;
        moment[0] += lg[j];
        if (mode_abs >= 1) moment[1] += lg[j] * c1;
        for (int nn = 2; nn <= mode_abs; ++nn) {
          const double cm = 2.0 * c1 * cm0 - cm1;
          moment[nn] += lg[j] * cm;
          cm1 = cm0;
          cm0 = cm;
        }
      }
      const double scale = 2.0 * pi_v / ring.na;
      for (std::size_t mi = 0; mi < modes.size(); ++mi)
        ang_[i][mi] = scale * moment[std::abs(modes[mi])];
    }
  }

  // Radial factor of L_nu[g(r) e^{i n theta}] at rho (the e^{i n theta_z}
  // phase is the caller's).  g receives (r, t = r^2).
  template <class G>
  double profile(std::size_t mode_index, G&& g) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < rings_.size(); ++i) {
      const auto& ring = rings_[i];
      const double wgt = ring.wt * std::pow(1.0 - ring.t, 2.0 * params_.nu - 2.0);
      acc += wgt * g(ring.r, ring.t) * ang_[i][mode_index];
    }
    return acc;
  }

  double rho() const { return rho_; }
  const std::vector<int>& modes() const { return modes_; }

 private:
  double rho_;
  spectral_params params_;
  std::vector<int> modes_;
  std::vector<detail::transform_ring> rings_;
  std::vector<std::vector<double>> ang_;
};

} // namespace logpot
