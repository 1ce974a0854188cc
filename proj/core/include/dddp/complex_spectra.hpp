#pragma once

// Resonance poles and perfect-transmission energies in the complex k-plane,
// and the even-parity spectrum of a delta centred in a hard box.

#include <optional>
#include <string_view>
#include <vector>

#include "dddp/numerics.hpp"
#include "dddp/potential.hpp"

namespace dddp {

/// Seed-grid settings for complex searches. Unset bounds are derived from the
/// potential: Re k up to (n_max + 2) pi / a, Im k down to the asymptotic depth
/// of the root chain at that Re k plus 1/a.
struct SearchOptions {
  Tolerances tol;
  int seeds_re = 40;
  int seeds_im = 20;
  std::optional<double> k_max;
  std::optional<double> k_im_max;
};

/// Gamow pole: E = E_n - i Gamma_n / 2 at k = K_n - i k'_n.
struct ResonanceEntry {
  Complex energy;
  Complex k;
  double width = 0.0;      ///< Gamma_n = 4 K_n k'_n
  double t_at_peak = 0.0;  ///< T(Re E_n)
  double residual = 0.0;

  SpectrumEntry as_spectrum_entry() const;
};

enum class SymmetryClass { symmetric_barriers, symmetric_wells, antisymmetric, asymmetric };

std::string_view to_string(SymmetryClass c) noexcept;

/// |v1 - v2| or |v1 + v2| below 1e-12 relative counts as (anti)symmetric.
SymmetryClass classify_symmetry(const DeltaPair& pot);

/// Zero of the reflection amplitude: real for (anti)symmetric pairs, otherwise
/// eps_n - i gamma_n / 2 with gamma_n > 0.
struct PTEntry {
  Complex energy;
  Complex k;
  double t_at_energy = 0.0;  ///< T(Re energy)
  SymmetryClass symmetry = SymmetryClass::asymmetric;
  double residual = 0.0;

  SpectrumEntry as_spectrum_entry() const;
};

/// (2ik - v1)(2ik - v2) - v1 v2 e^{2ika}; its zeros are the amplitude poles.
Complex resonance_residual(const DeltaPair& pot, Complex k) noexcept;
Complex resonance_residual_derivative(const DeltaPair& pot, Complex k) noexcept;

/// The n_max lowest resonances (Re k > 0, Im k < 0, Re E > 0), ascending in
/// Re E. Throws SearchIncomplete if the search rectangle holds fewer.
std::vector<ResonanceEntry> resonances(const DeltaPair& pot, int n_max, const SearchOptions& opts = {});

/// 2ik (v1 e^{-ika} + v2 e^{ika}) + 2i v1 v2 sin(ka): numerator of rho.
Complex pt_residual(const DeltaPair& pot, Complex k) noexcept;
Complex pt_residual_derivative(const DeltaPair& pot, Complex k) noexcept;

/// The n_max lowest perfect-transmission energies.
///
/// Antisymmetric pairs use k = n pi / a, symmetric pairs bisect the real
/// condition on each branch of tan(ka), and asymmetric pairs run a seeded
/// Newton search. Zeros of rho for an asymmetric pair with |v1| < |v2| sit in
/// the upper half-plane; they are conjugates of the mirrored pair's zeros, so
/// the search runs on the orientation with the stronger delta first and
/// reports eps - i gamma/2 (T does not depend on the incidence side).
std::vector<PTEntry> perfect_transmission_energies(const DeltaPair& pot, int n_max,
                                                   const SearchOptions& opts = {});

/// Positive even-parity eigenvalues of a delta of strength v0 centred between
/// rigid walls at -a and +a, found by shooting from the wall and bisecting to
/// the last ulp. The zero-energy
/// state of a well with u0 a = 2 is not listed (see zero_curvature_critical).
std::vector<double> hardbox_even_eigenvalues(double v0, double a, int n_max);

struct ZeroCurvatureReport {
  bool critical = false;
  double deviation = 0.0;  ///< u0 a - 2
};

/// Whether psi = Ax + B is the E = 0 even ground state of the hard-box well,
/// i.e. u0 a = 2 within 1e-9.
ZeroCurvatureReport zero_curvature_critical(double u0, double a);

}  // namespace dddp
