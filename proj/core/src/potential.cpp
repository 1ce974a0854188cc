#include "dddp/potential.hpp"

#include <cmath>

#include "dddp/errors.hpp"

namespace dddp {

void validate(const DeltaPair& pot, bool allow_zero_separation) {
  if (!std::isfinite(pot.v1) || !std::isfinite(pot.v2) || !std::isfinite(pot.a)) {
    throw InvalidParameters("delta strengths and separation must be finite");
  }
  if (pot.a < 0.0 || (pot.a == 0.0 && !allow_zero_separation)) {
    throw InvalidParameters("separation a must be positive");
  }
}

void validate(const WellPair& well) {
  if (!std::isfinite(well.u1) || !std::isfinite(well.u2) || !std::isfinite(well.a)) {
    throw InvalidParameters("well depths and separation must be finite");
  }
  if (well.u1 < 0.0 || well.u2 < 0.0) {
    throw InvalidParameters("well depths must be non-negative");
  }
  if (well.u1 == 0.0 && well.u2 == 0.0) {
    throw InvalidParameters("at least one well depth must be positive");
  }
  if (!(well.a > 0.0)) {
    throw InvalidParameters("separation a must be positive");
  }
}

Complex k_of_energy(double energy) noexcept {
  if (energy > 0.0) return {std::sqrt(energy), 0.0};
  if (energy < 0.0) return {0.0, std::sqrt(-energy)};
  return {0.0, 0.0};
}

Complex energy_of_k(Complex k) noexcept { return k * k; }

double width_of_k(Complex k) noexcept { return 4.0 * k.real() * (-k.imag()); }

std::string_view to_string(SpectrumKind kind) noexcept {
  switch (kind) {
    case SpectrumKind::bound:
      return "bound";
    case SpectrumKind::resonance:
      return "resonance";
    case SpectrumKind::perfect_transmission:
      return "perfect_transmission";
  }
  return "unknown";
}

}  // namespace dddp
