#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace cylsep {

/// Shrink ratios f = r/R of the two cylinders entering the separability
/// criterion, together with the gate phase.
struct GrowthQuery {
  double f_a = 0.0;
  double f_b = 0.0;
  double phi = 0.0;
};

/// Determinant (1+fA^4)(1+fB^4) - 2(fA^2+fB^2) + 2(2-fA^2-fB^2) fA^2 fB^2 cos(phi).
/// The gated cylinder product is separable (for f < 1, phi != 0) iff this is
/// non-negative.
double lemma1_determinant(const GrowthQuery& q);
double lemma1_determinant(double f_a, double f_b, double phi);

/// phi == 0 (mod 2pi): separable iff f_a, f_b <= 1. Otherwise requires
/// f_a, f_b < 1 and determinant >= -tol.
bool is_cyl_separable(const GrowthQuery& q, double tol = 0.0);
bool is_cyl_separable(double f_a, double f_b, double phi, double tol = 0.0);

/// Disentangling growth rate: the minimal R/r keeping gated cylinders
/// separable. With alpha = 4(cos(phi) - 1) this is sqrt(T + 1) where T is the
/// unique positive root of t^3 + alpha t + alpha = 0; returns 1 at phi == 0.
double lambda_of_phi(double phi);

/// Admissible input radius lambda(phi)^{-D} for degree-D graphs.
double region_r_max(double phi, int d_max);

/// Thermal excitation probability p_T = e^{-1/T} / (1 + e^{-1/T}), with
/// k_B = 1 and p_0 = 0.
double thermal_excitation_probability(double temperature);

/// Polar-angle bound of the simulatable region. `saturated` is set when the
/// thermal divisor 1 - 2 p_T pushes the arcsin argument past 1, meaning the
/// whole theta range is simulatable; theta is then pi/2.
struct ThetaBound {
  double theta = 0.0;
  bool saturated = false;
};
ThetaBound region_theta_max(double phi, int d_max,
                            std::optional<double> temperature = std::nullopt);

std::vector<std::pair<double, double>> curve_lambda(const std::vector<double>& grid);
std::vector<std::pair<double, ThetaBound>> curve_region(
    int d_max, const std::vector<double>& grid,
    std::optional<double> temperature = std::nullopt);

}  // namespace cylsep
