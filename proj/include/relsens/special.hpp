#pragma once

#include <cmath>
#include <span>

namespace relsens {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// CDF values are clamped to this range before feeding inverse CDFs, so
/// finite-precision tails never produce infinities.
inline constexpr double kProbClampLo = 1e-15;
inline constexpr double kProbClampHi = 1.0 - 1e-15;

inline double clamp_prob(double p) {
  if (p < kProbClampLo) return kProbClampLo;
  if (p > kProbClampHi) return kProbClampHi;
  return p;
}

inline double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

inline double log_norm_pdf(double x) { return -0.5 * x * x - 0.91893853320467274178; }

/// Standard-normal CDF via erfc; accurate in both tails.
inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

/// Upper tail P(X > x), accurate for large positive x.
inline double norm_sf(double x) { return 0.5 * std::erfc(x / kSqrt2); }

/// Inverse standard-normal CDF. Rational initial guess (Acklam) polished by a
/// Halley step on erfc; absolute error is near machine precision over
/// (1e-300, 1 - 1e-16), far tighter than the 1e-9 the transforms require.
double norm_cdf_inv(double p);

/// k-dimensional independent standard-normal density.
double norm_pdf_k(std::span<const double> u);

}  // namespace relsens
