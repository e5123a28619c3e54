#pragma once

#include <string_view>

namespace toughspec {

/// Shared slack for strict-inequality checks against a threshold.
inline constexpr double kThresholdTol = 1e-9;

struct ThresholdParams {
  int d = 0;
  int b = 0;
  int c = 0;  // ceil(d / b)

  // Throws ErrorKind::InvalidArgument unless d >= 1 and b >= 1.
  static ThresholdParams make(int d, int b);
};

enum class ThresholdBranch {
  // phi(d, b)
  PhiAlpha,                  // ceil(d/b) <= 2
  PhiOddCeiling,             // ceil(d/b) >= 3 odd
  PhiEvenCeilingOddDegree,   // ceil(d/b) >= 3 even, d odd
  PhiEvenCeilingEvenDegree,  // ceil(d/b) >= 3 even, d even
  // psi(d, b)
  PsiAlpha,            // d <= b + 1
  PsiSameParity,       // d >= b + 2, d and b same parity
  PsiOddDegreeEvenB,   // d >= b + 2 odd, b even
  PsiEvenDegreeOddB,   // d >= b + 2 even, b odd
};

std::string_view to_string(ThresholdBranch branch);

struct ThresholdValue {
  double value = 0.0;
  ThresholdBranch branch = ThresholdBranch::PhiAlpha;
  // Set when an alpha branch fires for even d. The certifier's regularity
  // logic makes that case vacuous, but the value is still reported.
  bool even_degree_alpha = false;
};

/// Largest root of x^3 - (d-2)x^2 - 2dx + d - 1, by bisection to 1e-12.
double alpha_d(int d);

/// The cubic whose largest root is alpha_d, evaluated at x.
double alpha_cubic(int d, double x);

ThresholdValue phi(const ThresholdParams& p);
ThresholdValue psi(const ThresholdParams& p);

enum class Comparison { Below, Boundary, Above };

std::string_view to_string(Comparison c);

Comparison compare_with_tolerance(double x, const ThresholdValue& threshold);

}  // namespace toughspec
