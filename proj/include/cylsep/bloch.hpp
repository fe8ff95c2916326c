#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>

namespace cylsep {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Reduce an angle into [0, 2pi).
double wrap_angle(double a);

/// A normalized single-qubit operator (I + x X + y Y + z Z) / 2, stored
/// without the implicit leading identity coefficient. The radial part
/// x^2 + y^2 may exceed 1 (the operator need not be positive semi-definite),
/// but |z| <= 1 is required so computational-basis probabilities stay in
/// [0, 1].
struct BlochOp {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  BlochOp() = default;
  BlochOp(double x_, double y_, double z_);

  double radius() const { return std::hypot(x, y); }
  double azimuth() const { return std::atan2(y, x); }

  /// Rotate the x,y components counterclockwise about the z axis.
  BlochOp rotated_z(double angle) const;

  /// Coefficient vector [1, x, y, z] in the Pauli expansion.
  Eigen::Vector4d coeffs() const { return {1.0, x, y, z}; }
};

bool approx_equal(const BlochOp& a, const BlochOp& b, double tol = 1e-12);

/// 4x4 real matrix of Pauli expansion coefficients rho_{ij} of a two-qubit
/// normalized operator, rows/cols indexed over (I, X, Y, Z); entry (0,0) is 1.
using PauliCoeff = Eigen::Matrix4d;

Eigen::Matrix2cd to_density(const BlochOp& op);
BlochOp bloch_from_density(const Eigen::Matrix2cd& rho);

/// rho_AB = (1/4) sum_{ij} rho_{ij} sigma_i (x) sigma_j, first tensor factor
/// is the row index of the coefficient matrix.
Eigen::Matrix4cd pauli_to_computational(const PauliCoeff& m);
PauliCoeff computational_to_pauli(const Eigen::Matrix4cd& rho);

/// Outer product coefficients rho_{ij} = a_i b_j with a_0 = b_0 = 1.
PauliCoeff product_matrix(const BlochOp& a, const BlochOp& b);

/// Conjugate by V_phi = diag(1, 1, 1, e^{i phi}); done by exact conversion to
/// the computational basis and back rather than a hand-derived transfer
/// matrix.
PauliCoeff apply_gate(double phi, const PauliCoeff& m);

/// A two-qubit diagonal unitary diag(e^{i phi_1}, .., e^{i phi_4}), kept in
/// canonical controlled-phase form: the channel equals V_phi followed by
/// z-rotations of the two Bloch vectors by local_a and local_b.
struct DiagonalGate {
  double phi = 0.0;      // canonical phase phi4 + phi1 - phi2 - phi3, [0, 2pi)
  double local_a = 0.0;  // gamma_1 = phi3 - phi1
  double local_b = 0.0;  // gamma_2 = phi2 - phi1

  static DiagonalGate canonical(double phi);
  static DiagonalGate from_raw(const std::array<double, 4>& phases);

  /// Diagonal phases (0, local_b, local_a, local_a + local_b + phi) of a raw
  /// gate with this channel, basis order |00>,|01>,|10>,|11>.
  std::array<double, 4> raw_equivalent() const;
};

}  // namespace cylsep
