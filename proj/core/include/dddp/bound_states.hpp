#pragma once

// Bound states of the double delta potential: the transcendental pole
// condition in p = sqrt(-E), its closed-form special cases, and level curves
// for separation or depth sweeps.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dddp/numerics.hpp"
#include "dddp/potential.hpp"

namespace dddp {

/// (2p - u1)(2p - u2) - u1 u2 e^{-2pa}. For 2pa < 1 it is evaluated as
/// 4p^2 - 2p(u1 + u2) - u1 u2 expm1(-2pa) so that the sign near p = 0 is
/// reliable. p = 0 is always a (spurious) root.
double bound_state_residual(const WellPair& well, double p) noexcept;

/// The same condition for signed strengths: (2p + v1)(2p + v2) - v1 v2 e^{-2pa}.
double bound_state_residual(const DeltaPair& pot, double p) noexcept;

/// Bound states of a double well, energies ascending (ground first).
///
/// The ground-state root lies above max(u1,u2)/2 and the excited root below
/// min(u1,u2)/2; the residual is negative in between, so each root gets its own
/// bracket. The excited state exists iff a > 1/u1 + 1/u2 (strictly).
std::vector<SpectrumEntry> bound_states(const WellPair& well, const Tolerances& tol = {});

/// Bound states for arbitrary signed strengths: two wells as above, one well and
/// one barrier give at most one level, two barriers none.
std::vector<SpectrumEntry> bound_states(const DeltaPair& pot, const Tolerances& tol = {});

/// Single delta of strength U1 + U2 (a = 0): E = -(U1 + U2)^2 / 4.
double merged_delta_energy(double depth1, double depth2);

/// Delta well of depth u1 at distance a from a rigid wall. Present only when
/// u1 a > 1; then E = -p^2 with e^{-2pa} = 1 - 2p/u1.
std::optional<double> wall_limit_eigenvalue(double u1, double a, const Tolerances& tol = {});

/// Energies -p^2 of symmetric wells from the factorised even/odd conditions
/// e^{-pa} = 2p/u0 - 1 (always) and e^{-pa} = 1 - 2p/u0 (iff u0 a > 2).
std::pair<double, std::optional<double>> symmetric_factored_roots(double u0, double a,
                                                                  const Tolerances& tol = {});

/// Separation a* = 1/u1 + 1/u2 beyond which a second level exists.
double second_level_threshold(double u1, double u2);

/// Large-separation levels (-max(u)^2/4, -min(u)^2/4).
std::pair<double, double> large_separation_limits(double u1, double u2);

enum class SweepParameter { separation, depth2 };

struct LevelCurvePoint {
  double sweep_value = 0.0;
  /// Up to two energies, ascending.
  std::vector<double> levels;
  /// Branch id of each level, carried over from the previous point by
  /// nearest-energy matching; a newly appearing level gets a fresh id.
  std::vector<int> branches;
  /// Solver failure at this point, if any.
  std::optional<std::string> error;
};

/// Bound states along a uniform grid of n values of a (or u2) in [lo, hi],
/// with the other parameters taken from fixed.
std::vector<LevelCurvePoint> level_sweep(const WellPair& fixed, SweepParameter parameter, double lo,
                                         double hi, std::size_t n, const Tolerances& tol = {});

}  // namespace dddp
