#pragma once

#include "pdepot/scaled_value.hpp"

namespace pdepot::specfun {

/// Dawson function D(z) = e^{-z^2} * int_0^z e^{x^2} dx.
/// Odd in z, ~ 1/(2z) as z -> inf. Relative accuracy ~1e-13.
double dawson(double z);

/// int_0^z e^{x^2} dx. Odd in z.
/// Throws std::overflow_error when the result exceeds double range
/// (use exp_integral_scaled instead).
double exp_integral(double z);

/// Overflow-safe form of exp_integral. For |z| > 3 evaluated as
/// e^{z^2} * dawson(z) in log space.
ScaledValue exp_integral_scaled(double z);

/// int_0^z int_0^u e^{x^2} dx du. Even in z.
/// Throws std::overflow_error when the result exceeds double range.
double double_exp_integral(double z);

/// Overflow-safe form of double_exp_integral.
ScaledValue double_exp_integral_scaled(double z);

}  // namespace pdepot::specfun
