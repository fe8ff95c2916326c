#include "cylsep/bloch.hpp"

#include <complex>
#include <stdexcept>

namespace cylsep {

namespace {

using std::complex;
const complex<double> kI(0.0, 1.0);

Eigen::Matrix2cd pauli(int i) {
  Eigen::Matrix2cd m;
  switch (i) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

const std::array<Eigen::Matrix4cd, 16>& pauli_products() {
  static const std::array<Eigen::Matrix4cd, 16> table = [] {
    std::array<Eigen::Matrix4cd, 16> t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        t[4 * i + j] = kron2(pauli(i), pauli(j));
    return t;
  }();
  return table;
}

}  // namespace

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;  // fmod rounding at the seam
  return w;
}

BlochOp::BlochOp(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
    throw std::invalid_argument("BlochOp: non-finite component");
  if (std::abs(z) > 1.0 + 1e-9)
    throw std::invalid_argument("BlochOp: |z| > 1 is not a normalised dual element");
  if (z > 1.0) z = 1.0;
  if (z < -1.0) z = -1.0;
}

BlochOp BlochOp::rotated_z(double angle) const {
  const double c = std::cos(angle), s = std::sin(angle);
  return BlochOp(c * x - s * y, s * x + c * y, z);
}

bool approx_equal(const BlochOp& a, const BlochOp& b, double tol) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol &&
         std::abs(a.z - b.z) <= tol;
}

Eigen::Matrix2cd to_density(const BlochOp& op) {
  Eigen::Matrix2cd rho;
  rho << 1.0 + op.z, op.x - kI * op.y,
         op.x + kI * op.y, 1.0 - op.z;
  return 0.5 * rho;
}

BlochOp bloch_from_density(const Eigen::Matrix2cd& rho) {
  return BlochOp(2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(),
                 (rho(0, 0) - rho(1, 1)).real());
}

Eigen::Matrix4cd pauli_to_computational(const PauliCoeff& m) {
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  const auto& table = pauli_products();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out += m(i, j) * table[4 * i + j];
  return 0.25 * out;
}

PauliCoeff computational_to_pauli(const Eigen::Matrix4cd& rho) {
  PauliCoeff m;
  const auto& table = pauli_products();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m(i, j) = (table[4 * i + j] * rho).trace().real();
  return m;
}

PauliCoeff product_matrix(const BlochOp& a, const BlochOp& b) {
  return a.coeffs() * b.coeffs().transpose();
}

PauliCoeff apply_gate(double phi, const PauliCoeff& m) {
  Eigen::Vector4cd v;
  v << 1.0, 1.0, 1.0, std::exp(kI * phi);
  const Eigen::Matrix4cd rho = pauli_to_computational(m);
  const Eigen::Matrix4cd out = v.asDiagonal() * rho * v.conjugate().asDiagonal();
  return computational_to_pauli(out);
}

DiagonalGate DiagonalGate::canonical(double phi) {
  DiagonalGate g;
  g.phi = wrap_angle(phi);
  return g;
}

DiagonalGate DiagonalGate::from_raw(const std::array<double, 4>& p) {
  for (double v : p)
    if (!std::isfinite(v)) throw std::invalid_argument("DiagonalGate: non-finite phase");
  DiagonalGate g;
  g.phi = wrap_angle(p[3] + p[0] - p[1] - p[2]);
  g.local_a = wrap_angle(p[2] - p[0]);
  g.local_b = wrap_angle(p[1] - p[0]);
  return g;
}

std::array<double, 4> DiagonalGate::raw_equivalent() const {
  return {0.0, local_b, local_a, local_a + local_b + phi};
}

}  // namespace cylsep
