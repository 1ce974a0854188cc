#pragma once

// Double delta potential V(x) = v1 delta(x) + v2 delta(x - a) in solver units
// 2m = hbar^2 = 1, so strengths are inverse lengths and E = k^2.

#include <complex>
#include <string_view>

namespace dddp {

using Complex = std::complex<double>;

/// Signed strengths (positive = barrier, negative = well) and separation.
struct DeltaPair {
  double v1 = 0.0;
  double v2 = 0.0;
  double a = 1.0;

  bool is_free() const noexcept { return v1 == 0.0 && v2 == 0.0; }
  /// Same potential seen from the other side (v1 <-> v2).
  DeltaPair mirrored() const noexcept { return {v2, v1, a}; }
};

/// Attractive pair described by depths u_j = -v_j >= 0.
struct WellPair {
  double u1 = 0.0;
  double u2 = 0.0;
  double a = 1.0;

  DeltaPair as_delta_pair() const noexcept { return {-u1, -u2, a}; }
};

/// Throws InvalidParameters unless the strengths are finite and a > 0
/// (or a >= 0 when allow_zero_separation is set).
void validate(const DeltaPair& pot, bool allow_zero_separation = false);
void validate(const WellPair& well);

/// k = +sqrt(E) for E > 0, k = +i sqrt(-E) for E < 0, 0 at E = 0.
Complex k_of_energy(double energy) noexcept;

/// E = k^2 on the analytically continued plane.
Complex energy_of_k(Complex k) noexcept;

/// Decay width of a pole at k: Gamma = -2 Im(k^2) = 4 Re(k) (-Im(k)).
double width_of_k(Complex k) noexcept;

enum class SpectrumKind { bound, resonance, perfect_transmission };

std::string_view to_string(SpectrumKind kind) noexcept;

/// One discrete level of any of the three spectra.
struct SpectrumEntry {
  SpectrumKind kind = SpectrumKind::bound;
  Complex energy;
  Complex k;
  /// T at Re(energy); NaN for bound states.
  double t_at_real_part = 0.0;
  /// |defining equation| at the root.
  double residual = 0.0;
};

}  // namespace dddp
