#include "dddp/scattering.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "dddp/errors.hpp"

namespace dddp {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPoleThreshold = 1e-14;
constexpr double kPoleDistance = 1e-9;

Complex rho_numerator(const DeltaPair& pot, Complex k) {
  const Complex ika = kI * k * pot.a;
  return 2.0 * kI * k * (pot.v1 * std::exp(-ika) + pot.v2 * std::exp(ika)) +
         2.0 * kI * pot.v1 * pot.v2 * std::sin(k * pot.a);
}

// D e^{ika} at k = ip, divided by p: (2p + v1)(2p + v2) - v1 v2 e^{-2pa}
// over p. The division removes the spurious zero at p = 0.
// expm1(-2pa)/p and its p-derivative switch to a series where 2pa is small.
struct ReducedPole {
  double value;
  double derivative;
};

ReducedPole reduced_pole_function(const DeltaPair& pot, double p) {
  const double a = pot.a;
  const double x = 2.0 * p * a;
  double g, dg;
  if (x < 1e-4) {
    g = -2.0 * a + 2.0 * a * a * p - (4.0 / 3.0) * a * a * a * p * p;
    dg = 2.0 * a * a - (8.0 / 3.0) * a * a * a * p;
  } else {
    const double em1 = std::expm1(-x);
    g = em1 / p;
    dg = (-2.0 * a * std::exp(-x) * p - em1) / (p * p);
  }
  const double prod = pot.v1 * pot.v2;
  return {4.0 * p + 2.0 * (pot.v1 + pot.v2) - prod * g, 4.0 - prod * dg};
}

void require_wells(const WellPair& well) {
  if (!(well.u1 > 0.0) || !(well.u2 > 0.0) || !(well.a > 0.0)) {
    throw InvalidParameters("zero-energy reflection needs u1 > 0, u2 > 0 and a > 0");
  }
}

// 2x2 transfer matrix acting on (psi, psi').
using Matrix2 = std::array<Complex, 4>;

Matrix2 multiply(const Matrix2& x, const Matrix2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

// Propagates (psi, psi') across a constant-potential segment of signed length
// len, where q^2 = E - V.
Matrix2 segment(double energy, double potential, double len) {
  const Complex q = std::sqrt(Complex(energy - potential, 0.0));
  const Complex ql = q * len;
  const Complex c = std::cos(ql);
  const Complex s = std::sin(ql);
  const Complex s_over_q = (std::abs(ql) < 1e-8) ? Complex(len, 0.0) : s / q;
  return {c, s_over_q, -q * s, c};
}

}  // namespace

Complex amplitude_denominator(const DeltaPair& pot, Complex k) noexcept {
  const Complex ika = kI * k * pot.a;
  return (2.0 * kI * k - pot.v1) * (2.0 * kI * k - pot.v2) * std::exp(-ika) -
         pot.v1 * pot.v2 * std::exp(ika);
}

AmplitudePair amplitudes(const DeltaPair& pot, Complex k) {
  if (k == Complex(0.0, 0.0)) {
    throw InvalidParameters("amplitudes are indeterminate at k = 0; use zero_energy_reflection");
  }
  const Complex den = amplitude_denominator(pot, k);
  if (std::abs(den) < kPoleThreshold) {
    throw PoleHit("amplitude denominator vanishes: k is at a pole");
  }
  const Complex tau = -4.0 * k * k * std::exp(-kI * k * pot.a) / den;
  return {rho_numerator(pot, k) / den, tau};
}

Complex reflection_amplitude(const DeltaPair& pot, Complex k) { return amplitudes(pot, k).rho; }

Complex transmission_amplitude(const DeltaPair& pot, Complex k) { return amplitudes(pot, k).tau; }

ScanRow coefficients(const DeltaPair& pot, double energy) {
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw InvalidParameters("coefficients need a finite energy E > 0");
  }
  const AmplitudePair amp = amplitudes(pot, Complex(std::sqrt(energy), 0.0));
  return {energy, std::norm(amp.rho), std::norm(amp.tau)};
}

std::string_view to_string(ZeroEnergyCase c) noexcept {
  switch (c) {
    case ZeroEnergyCase::critical_symmetric:
      return "critical_symmetric";
    case ZeroEnergyCase::critical_sum_rule:
      return "critical_sum_rule";
    case ZeroEnergyCase::generic:
      return "generic";
  }
  return "unknown";
}

ZeroEnergyClass zero_energy_reflection(const WellPair& well, double tol_crit) {
  require_wells(well);
  const double u1 = well.u1;
  const double u2 = well.u2;
  const double a = well.a;

  ZeroEnergyClass out;
  if (std::abs(u1 - u2) <= tol_crit * u1 && std::abs(u1 * a - 2.0) <= tol_crit) {
    out.case_tag = ZeroEnergyCase::critical_symmetric;
    out.rho0 = 0.0;
  } else if (std::abs(1.0 / u1 + 1.0 / u2 - a) <= tol_crit * a) {
    out.case_tag = ZeroEnergyCase::critical_sum_rule;
    const double x = u2 * a;
    out.rho0 = x * (x - 2.0) / (x * x - 2.0 * x + 2.0);
  } else {
    // (a u1 u2 - u1 - u2) / (u1 + u2 - a u1 u2) off the critical manifold.
    out.case_tag = ZeroEnergyCase::generic;
    out.rho0 = -1.0;
  }
  out.r0 = out.rho0 * out.rho0;
  return out;
}

double limit_consistency_check(const WellPair& well, double k_small, double tol_crit) {
  if (!(k_small > 0.0) || k_small > 1e-3) {
    throw InvalidParameters("limit_consistency_check needs 0 < k_small <= 1e-3");
  }
  const ZeroEnergyClass zero = zero_energy_reflection(well, tol_crit);
  const Complex rho = reflection_amplitude(well.as_delta_pair(), Complex(k_small, 0.0));
  return std::abs(std::norm(rho) - zero.r0);
}

ScanRow zero_energy_coefficients(const DeltaPair& pot) {
  validate(pot);
  if (pot.is_free()) return {0.0, 0.0, 1.0};
  if (pot.v1 < 0.0 && pot.v2 < 0.0) {
    const ZeroEnergyClass zero = zero_energy_reflection({-pot.v1, -pot.v2, pot.a});
    return {0.0, zero.r0, 1.0 - zero.r0};
  }
  // Linear coefficient of the bound-state residual at p = 0; when it is
  // nonzero rho -> -1.
  const double slope = pot.v1 + pot.v2 + pot.a * pot.v1 * pot.v2;
  if (std::abs(slope) > 1e-9 * (std::abs(pot.v1) + std::abs(pot.v2))) return {0.0, 1.0, 0.0};
  const ScanRow near_zero = coefficients(pot, 1e-12);
  return {0.0, near_zero.reflection, near_zero.transmission};
}

double transmission_negative_energy(const DeltaPair& pot, double energy) {
  if (!(energy < 0.0) || !std::isfinite(energy)) {
    throw InvalidParameters("transmission_negative_energy needs a finite E < 0");
  }
  validate(pot);
  // tau = -4k^2 / (D e^{ika}) = 4p / q(p) with q the reduced pole function.
  const double p = std::sqrt(-energy);
  const ReducedPole q = reduced_pole_function(pot, p);
  // |q / q'| estimates the distance in p to the nearest pole.
  if (std::abs(q.value) < kPoleThreshold || std::abs(q.value) < kPoleDistance * std::abs(q.derivative)) {
    throw PoleHit("E is at a bound-state pole of T");
  }
  const double tau = 4.0 * p / q.value;
  return tau * tau;
}

ScanRow oracle_square_limit(const DeltaPair& pot, double energy, double w) {
  validate(pot);
  if (!(energy > 0.0)) throw InvalidParameters("oracle_square_limit needs E > 0");
  if (!(w > 0.0) || !(w < pot.a / 4.0)) {
    throw InvalidParameters("oracle_square_limit needs 0 < w < a/4");
  }
  const double k = std::sqrt(energy);
  const double x_left = -0.5 * w;
  const double x_right = pot.a + 0.5 * w;

  // Backward propagation from x_right to x_left: segments with negative length.
  Matrix2 back = segment(energy, pot.v2 / w, -w);
  back = multiply(segment(energy, 0.0, -(pot.a - w)), back);
  back = multiply(segment(energy, pot.v1 / w, -w), back);

  // Outgoing wave F e^{ikx} with F = 1 on the right.
  const Complex psi_r = std::exp(Complex(0.0, k * x_right));
  const Complex dpsi_r = Complex(0.0, k) * psi_r;
  const Complex psi_l = back[0] * psi_r + back[1] * dpsi_r;
  const Complex dpsi_l = back[2] * psi_r + back[3] * dpsi_r;

  const Complex ik(0.0, k);
  const Complex amp_a = 0.5 * (psi_l + dpsi_l / ik) * std::exp(-ik * x_left);
  const Complex amp_b = 0.5 * (psi_l - dpsi_l / ik) * std::exp(ik * x_left);
  return {energy, std::norm(amp_b / amp_a), 1.0 / std::norm(amp_a)};
}

}  // namespace dddp
