#include "toughspec/thresholds.hpp"

#include <cmath>
#include <string>

#include "toughspec/error.hpp"

namespace toughspec {

ThresholdParams ThresholdParams::make(int d, int b) {
  if (d < 1) throw invalid_argument("degree d must be >= 1, got " + std::to_string(d));
  if (b < 1) throw invalid_argument("b must be >= 1, got " + std::to_string(b));
  return ThresholdParams{d, b, (d + b - 1) / b};
}

std::string_view to_string(ThresholdBranch branch) {
  switch (branch) {
    case ThresholdBranch::PhiAlpha: return "phi_alpha";
    case ThresholdBranch::PhiOddCeiling: return "phi_odd_c";
    case ThresholdBranch::PhiEvenCeilingOddDegree: return "phi_even_c_odd_d";
    case ThresholdBranch::PhiEvenCeilingEvenDegree: return "phi_even_c_even_d";
    case ThresholdBranch::PsiAlpha: return "psi_alpha";
    case ThresholdBranch::PsiSameParity: return "psi_same_parity";
    case ThresholdBranch::PsiOddDegreeEvenB: return "psi_odd_d_even_b";
    case ThresholdBranch::PsiEvenDegreeOddB: return "psi_even_d_odd_b";
  }
  return "unknown";
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Below: return "below";
    case Comparison::Boundary: return "boundary";
    case Comparison::Above: return "above";
  }
  return "unknown";
}

double alpha_cubic(int d, double x) {
  const double dd = d;
  return ((x - (dd - 2.0)) * x - 2.0 * dd) * x + dd - 1.0;
}

double alpha_d(int d) {
  if (d < 1) throw invalid_argument("alpha_d requires d >= 1, got " + std::to_string(d));
  const double dd = d;
  double lo = 0.0;
  double hi = 0.0;
  if (d >= 3) {
    // 2m/n of (K1 u K2) v cocktail(d-1) bounds the root from below; the
    // upper end is d - 1/(d+4).
    lo = dd - 1.0 / (dd + 2.0);
    hi = dd - 1.0 / (dd + 4.0);
  } else {
    // Right critical point of the cubic, where it is non-positive.
    lo = ((2.0 * dd - 4.0) + std::sqrt((2.0 * dd - 4.0) * (2.0 * dd - 4.0) + 24.0 * dd)) / 6.0;
    hi = dd + 1.0;
  }
  // Invariant: f(lo) <= 0 < f(hi).
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (alpha_cubic(d, mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

ThresholdValue phi(const ThresholdParams& p) {
  const double d = p.d;
  const double c = p.c;
  if (p.c <= 2) return {alpha_d(p.d), ThresholdBranch::PhiAlpha, p.d % 2 == 0};
  if (p.c % 2 == 1)
    return {(d - 2.0 + std::sqrt(d * d + 4.0 * d + 8.0 - 4.0 * c)) / 2.0,
            ThresholdBranch::PhiOddCeiling, false};
  if (p.d % 2 == 1)
    return {(d - 3.0 + std::sqrt(d * d + 6.0 * d + 13.0 - 4.0 * c)) / 2.0,
            ThresholdBranch::PhiEvenCeilingOddDegree, false};
  return {(d - 2.0 + std::sqrt(d * d + 4.0 * d + 12.0 - 4.0 * c)) / 2.0,
          ThresholdBranch::PhiEvenCeilingEvenDegree, false};
}

ThresholdValue psi(const ThresholdParams& p) {
  const double d = p.d;
  const double b = p.b;
  if (p.d <= p.b + 1) return {alpha_d(p.d), ThresholdBranch::PsiAlpha, p.d % 2 == 0};
  if (p.d % 2 == p.b % 2)
    return {(d - 2.0 + std::sqrt(d * d + 4.0 * b + 4.0)) / 2.0, ThresholdBranch::PsiSameParity,
            false};
  if (p.d % 2 == 1)
    return {(d - 3.0 + std::sqrt(d * d + 4.0 * b + 2.0 * d + 9.0)) / 2.0,
            ThresholdBranch::PsiOddDegreeEvenB, false};
  return {(d - 2.0 + std::sqrt(d * d + 4.0 * b + 8.0)) / 2.0, ThresholdBranch::PsiEvenDegreeOddB,
          false};
}

Comparison compare_with_tolerance(double x, const ThresholdValue& threshold) {
  if (x < threshold.value - kThresholdTol) return Comparison::Below;
  if (x > threshold.value + kThresholdTol) return Comparison::Above;
  return Comparison::Boundary;
}

}  // namespace toughspec
