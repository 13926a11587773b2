#pragma once

#include <cmath>
#include <string>

#include "logpot/errors.hpp"

namespace logpot {

// Number of bound Landau levels below the continuum: m = 0 .. floor(nu - 1/2).
inline int max_landau_level(double nu) {
  return static_cast<int>(std::floor(nu - 0.5));
}

// Magnetic-field / level pair (nu, m) selecting the eigenspace the transform
// is restricted to.  Validity: 2 nu > 1 and 0 <= m <= floor(nu - 1/2).
struct spectral_params {
  double nu = 1.0;
  int m = 0;

  void validate() const {
    if (!(std::isfinite(nu)) || !(2.0 * nu > 1.0))
      throw parameter_error("spectral_params: 2nu>1 violated (nu = " +
                            std::to_string(nu) + ")");
    if (m < 0 || m > max_landau_level(nu))
      throw parameter_error("spectral_params: m <= floor(nu-1/2) violated (nu = " +
                            std::to_string(nu) + ", m = " + std::to_string(m) + ")");
  }
};

// Index k >= 0 of a basis element of the bound-state space.
struct basis_index {
  int k = 0;
  constexpr basis_index() = default;
  constexpr basis_index(int kk) : k(kk) {}
  constexpr operator int() const { return k; }

  void validate() const {
    if (k < 0) throw parameter_error("basis_index: k must be >= 0");
  }
};

} // namespace logpot
