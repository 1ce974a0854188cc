#pragma once

// Reflection/transmission amplitudes of the double delta potential for a wave
// incident from the left, their zero-energy limit, the negative-energy
// continuation of T, and an independent finite-width transfer-matrix oracle.

#include <string_view>

#include "dddp/potential.hpp"

namespace dddp {

/// rho = B/A and tau = F/A for psi = A e^{ikx} + B e^{-ikx} (x < 0),
/// psi = F e^{ikx} (x > a).
struct AmplitudePair {
  Complex rho;
  Complex tau;
};

/// One row of an energy scan. reflection is NaN where it is not defined
/// (negative energies).
struct ScanRow {
  double energy = 0.0;
  double reflection = 0.0;
  double transmission = 0.0;
};

/// Shared denominator (2ik - v1)(2ik - v2) e^{-ika} - v1 v2 e^{ika}.
Complex amplitude_denominator(const DeltaPair& pot, Complex k) noexcept;

/// Both amplitudes at complex k. Throws InvalidParameters for k = 0 and
/// PoleHit when |denominator| < 1e-14.
AmplitudePair amplitudes(const DeltaPair& pot, Complex k);
Complex reflection_amplitude(const DeltaPair& pot, Complex k);
Complex transmission_amplitude(const DeltaPair& pot, Complex k);

/// R = |rho|^2 and T = |tau|^2 at real E > 0.
ScanRow coefficients(const DeltaPair& pot, double energy);

enum class ZeroEnergyCase { critical_symmetric, critical_sum_rule, generic };

std::string_view to_string(ZeroEnergyCase c) noexcept;

struct ZeroEnergyClass {
  ZeroEnergyCase case_tag = ZeroEnergyCase::generic;
  double rho0 = -1.0;
  double r0 = 1.0;
};

inline constexpr double kDefaultCriticalTolerance = 1e-9;

/// Zero-energy reflection of a double well, i.e. the k -> 0 limit of rho.
///
/// The limit is -1 (total reflection) unless the pair sits on a critical
/// manifold:
///  - u1 = u2 = u0 with u0 a = 2: rho(0) = 0;
///  - 1/u1 + 1/u2 = a: rho(0) = u2 a (u2 a - 2) / (u2^2 a^2 - 2 u2 a + 2).
/// Both tests use the relative tolerance tol_crit; the symmetric case wins
/// when both hold.
ZeroEnergyClass zero_energy_reflection(const WellPair& well, double tol_crit = kDefaultCriticalTolerance);

/// | |rho(k_small)|^2 - r0 | with rho evaluated directly, for 0 < k_small <= 1e-3.
double limit_consistency_check(const WellPair& well, double k_small,
                               double tol_crit = kDefaultCriticalTolerance);

/// R and T at exactly E = 0 for any pair: the critical classification for
/// double wells, R = 1 whenever the zero-energy slope of the bound-state
/// residual does not vanish, and a small-k evaluation otherwise.
ScanRow zero_energy_coefficients(const DeltaPair& pot);

/// |tau(k = i sqrt(-E))|^2 for E < 0. Diverges at bound states: throws PoleHit
/// when the estimated distance in p = sqrt(-E) to a pole is below 1e-9. The
/// spurious zero of the denominator at p = 0 is divided out, so T -> 0 as
/// E -> 0- unless the pair is critical.
double transmission_negative_energy(const DeltaPair& pot, double energy);

/// R, T from exact transfer matrices of two square potentials of height v_j/w
/// and width w centred on the delta positions. Converges to coefficients() as
/// O(w). Requires 0 < w < a/4 and E > 0.
ScanRow oracle_square_limit(const DeltaPair& pot, double energy, double w);

}  // namespace dddp
