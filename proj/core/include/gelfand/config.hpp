#pragma once

#include <cstddef>

namespace gelfand {

// Numeric tolerances shared across the library. Exact (integer/rational)
// paths do not consult these; they apply to floating-point checks only.
inline constexpr double kResidualTol = 1e-10;  // equality/residual checks
inline constexpr double kSlackTol = 1e-12;     // signed slack of inequality checks
inline constexpr double kPsdTol = 1e-10;       // Gram minimum-eigenvalue floor
inline constexpr double kEigenGapTol = 1e-8;   // eigenvalue collision threshold

// Default caps, overridable through the environment.
inline constexpr std::size_t kDefaultOrderCap = 5040;  // GP_MAX_ORDER
inline constexpr std::size_t kDefaultPsdCap = 4096;    // GP_PSD_CAP

/// Generator-closure cap: GP_MAX_ORDER if set, else 5040.
std::size_t order_cap();

/// Largest group order accepted by the Gram PSD certificate:
/// GP_PSD_CAP if set, else 4096.
std::size_t psd_cap();

}  // namespace gelfand
