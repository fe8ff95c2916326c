#include "cylsep/growth.hpp"

#include "cylsep/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace cylsep {

double lemma1_determinant(const GrowthQuery& q) {
  const double fa2 = q.f_a * q.f_a, fb2 = q.f_b * q.f_b;
  return (1.0 + fa2 * fa2) * (1.0 + fb2 * fb2) - 2.0 * (fa2 + fb2) +
         2.0 * (2.0 - fa2 - fb2) * fa2 * fb2 * std::cos(q.phi);
}

double lemma1_determinant(double f_a, double f_b, double phi) {
  return lemma1_determinant(GrowthQuery{f_a, f_b, phi});
}

bool is_cyl_separable(const GrowthQuery& q, double tol) {
  if (!(q.f_a > 0.0) || !(q.f_b > 0.0))
    throw std::invalid_argument("is_cyl_separable: shrink ratios must be positive");
  if (wrap_angle(q.phi) == 0.0) return q.f_a <= 1.0 && q.f_b <= 1.0;
  if (q.f_a >= 1.0 || q.f_b >= 1.0) return false;
  return lemma1_determinant(q) >= -tol;
}

bool is_cyl_separable(double f_a, double f_b, double phi, double tol) {
  return is_cyl_separable(GrowthQuery{f_a, f_b, phi}, tol);
}

double lambda_of_phi(double phi) {
  const double alpha = 4.0 * (std::cos(phi) - 1.0);
  if (alpha == 0.0) return 1.0;
  const auto cubic = [alpha](double t) { return t * t * t + alpha * (t + 1.0); };

  // Exactly one positive root (alpha < 0), so bracketing is safe: grow the
  // upper end geometrically, then bisect.
  double lo = 0.0, hi = 1.0;
  while (cubic(hi) <= 0.0) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (cubic(mid) < 0.0 ? lo : hi) = mid;
  }
  double t = 0.5 * (lo + hi);
  // Newton polish to drive the residual to rounding level.
  for (int it = 0; it < 3; ++it) {
    const double d = 3.0 * t * t + alpha;
    if (d <= 0.0) break;
    t -= cubic(t) / d;
  }
  return std::sqrt(t + 1.0);
}

double region_r_max(double phi, int d_max) {
  if (d_max < 1) throw std::invalid_argument("region_r_max: D must be >= 1");
  return std::pow(lambda_of_phi(phi), -d_max);
}

double thermal_excitation_probability(double temperature) {
  if (temperature < 0.0)
    throw std::invalid_argument("temperature must be non-negative");
  if (temperature == 0.0) return 0.0;
  const double e = std::exp(-1.0 / temperature);
  return e / (1.0 + e);
}

ThetaBound region_theta_max(double phi, int d_max, std::optional<double> temperature) {
  double arg = region_r_max(phi, d_max);
  if (temperature) {
    const double divisor = 1.0 - 2.0 * thermal_excitation_probability(*temperature);
    arg /= divisor;
  }
  if (arg > 1.0) return {0.5 * kPi, true};
  return {std::asin(arg), false};
}

std::vector<std::pair<double, double>> curve_lambda(const std::vector<double>& grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(grid.size());
  for (double phi : grid) {
    if (phi < 0.0 || phi >= kTwoPi)
      throw std::invalid_argument("curve_lambda: grid point outside [0, 2pi)");
    out.emplace_back(phi, lambda_of_phi(phi));
  }
  return out;
}

std::vector<std::pair<double, ThetaBound>> curve_region(
    int d_max, const std::vector<double>& grid, std::optional<double> temperature) {
  std::vector<std::pair<double, ThetaBound>> out;
  out.reserve(grid.size());
  for (double phi : grid)
    out.emplace_back(phi, region_theta_max(phi, d_max, temperature));
  return out;
}

}  // namespace cylsep
