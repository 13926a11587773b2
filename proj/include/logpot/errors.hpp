#pragma once

#include <stdexcept>
#include <string>

namespace logpot {

// Error taxonomy. Every throwing routine documents which of these it can
// raise; anything else escaping a public entry point is a bug.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// argument outside the mathematical domain of the operation
struct domain_error : error { using error::error; };
// evaluation lands on a pole of Gamma / a vanishing series denominator
struct pole_error : error { using error::error; };
// structurally invalid parameter combination (no finite interpretation)
struct parameter_error : error { using error::error; };
// series cannot converge for the given argument
struct divergence_error : error { using error::error; };
// series failed to meet tolerance within the term budget
struct truncation_error : error { using error::error; };
// invalid quadrature sizes
struct size_error : error { using error::error; };
// evaluation point collides with a quadrature node ring
struct singularity_error : error { using error::error; };
// finite-difference step outside the stable range
struct step_error : error { using error::error; };
// not enough data rows for the requested operation
struct range_error : error { using error::error; };
// file system failures while writing outputs
struct io_error : error { using error::error; };

} // namespace logpot
