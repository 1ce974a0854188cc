#include "dddp/complex_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "dddp/errors.hpp"
#include "dddp/scattering.hpp"

namespace dddp {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
constexpr double kSymmetryTolerance = 1e-12;
constexpr double kSeedImTop = -0.001;

struct Rectangle {
  double re_lo;
  double re_hi;
  double im_lo;
  double im_hi;
};

using RootFilter = std::function<bool(Complex)>;

void newton_grid(const ComplexFunction& f, const ComplexFunction& df, const Rectangle& rect, int nx, int ny,
                 const Tolerances& tol, const RootFilter& accept, std::vector<RootFindReport>& found) {
  for (int i = 0; i < nx; ++i) {
    const double re = rect.re_lo + (rect.re_hi - rect.re_lo) * (nx == 1 ? 0.5 : double(i) / (nx - 1));
    for (int j = 0; j < ny; ++j) {
      const double im = rect.im_lo + (rect.im_hi - rect.im_lo) * (ny == 1 ? 0.5 : double(j) / (ny - 1));
      RootFindReport r = newton_complex(f, df, Complex(re, im), tol.tol_residual, tol.max_iter);
      if (r.converged && accept(r.root)) found.push_back(r);
    }
  }
}

// Seeded Newton over the rectangle, then targeted reseeding of any gap wider
// than 1.5 * spacing in Re k. Inside a gap the residual is first deflated by
// the roots already known, then the result is polished on the original
// function.
std::vector<RootFindReport> complex_search(const ComplexFunction& f, const ComplexFunction& df,
                                           const Rectangle& rect, double spacing, const SearchOptions& opts,
                                           const RootFilter& accept) {
  const Tolerances& tol = opts.tol;
  std::vector<RootFindReport> found;
  newton_grid(f, df, rect, opts.seeds_re, opts.seeds_im, tol, accept, found);
  found = dedupe_and_sort(std::move(found), tol.tol_merge);

  std::vector<double> edges{0.0};
  for (const RootFindReport& r : found) edges.push_back(r.root.real());
  edges.push_back(rect.re_hi);

  std::vector<RootFindReport> extra;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const double lo = edges[i - 1];
    const double hi = std::min(edges[i], rect.re_hi);
    if (hi - lo <= 1.5 * spacing) continue;
    const Rectangle gap{lo + 0.05 * spacing, hi - 0.05 * spacing, rect.im_lo, rect.im_hi};
    newton_grid(f, df, gap, 12, opts.seeds_im, tol, accept, extra);

    const std::vector<Complex> known = [&] {
      std::vector<Complex> ks;
      for (const RootFindReport& r : found) ks.push_back(r.root);
      for (const RootFindReport& r : extra) ks.push_back(r.root);
      return ks;
    }();
    const ComplexFunction deflated = [&](Complex k) {
      Complex v = f(k);
      for (const Complex& z : known) v /= (k - z);
      return v;
    };
    const ComplexFunction deflated_d = [&](Complex k) {
      const Complex fk = f(k);
      Complex log_d = df(k) / fk;
      for (const Complex& z : known) log_d -= 1.0 / (k - z);
      return deflated(k) * log_d;
    };
    for (int j = 0; j < opts.seeds_im; ++j) {
      const double im = rect.im_lo + (rect.im_hi - rect.im_lo) * double(j) / std::max(1, opts.seeds_im - 1);
      const RootFindReport d = newton_complex(deflated, deflated_d, Complex(0.5 * (gap.re_lo + gap.re_hi), im),
                                              tol.tol_residual, tol.max_iter);
      if (!d.converged) continue;
      RootFindReport polished = newton_complex(f, df, d.root, tol.tol_residual, tol.max_iter);
      polished.seed = d.seed;
      if (polished.converged && accept(polished.root)) extra.push_back(polished);
    }
  }
  found.insert(found.end(), extra.begin(), extra.end());
  return dedupe_and_sort(std::move(found), tol.tol_merge);
}

// Depth -Im k of the asymptotic pole chain at Re k = k_re, where
// |e^{2ika}| = |(2ik - v1)(2ik - v2) / (v1 v2)|.
double pole_chain_depth(const DeltaPair& pot, double k_re) {
  const double prod = std::abs(pot.v1 * pot.v2);
  if (prod == 0.0) return 0.0;
  const double num = std::abs(Complex(-pot.v1, 2.0 * k_re)) * std::abs(Complex(-pot.v2, 2.0 * k_re));
  return std::max(0.0, std::log(num / prod) / (2.0 * pot.a));
}

void require_count(int n_max) {
  if (n_max < 1) throw InvalidParameters("n_max must be at least 1");
}

// Real PT condition on the real axis for v1 = v2 = v0:
// pt_residual / (2i) = v0 (2k cos ka + v0 sin ka).
double symmetric_pt_condition(const DeltaPair& pot, double k) {
  return pt_residual(pot, Complex(k, 0.0)).imag();
}

PTEntry make_pt_entry(const DeltaPair& pot, const DeltaPair& oriented, Complex k, SymmetryClass sym) {
  PTEntry e;
  e.k = k;
  e.energy = energy_of_k(k);
  e.symmetry = sym;
  e.residual = std::abs(pt_residual(oriented, k));
  e.t_at_energy = coefficients(pot, e.energy.real()).transmission;
  return e;
}

}  // namespace

SpectrumEntry ResonanceEntry::as_spectrum_entry() const {
  return {SpectrumKind::resonance, energy, k, t_at_peak, residual};
}

SpectrumEntry PTEntry::as_spectrum_entry() const {
  return {SpectrumKind::perfect_transmission, energy, k, t_at_energy, residual};
}

std::string_view to_string(SymmetryClass c) noexcept {
  switch (c) {
    case SymmetryClass::symmetric_barriers:
      return "symmetric_barriers";
    case SymmetryClass::symmetric_wells:
      return "symmetric_wells";
    case SymmetryClass::antisymmetric:
      return "antisymmetric";
    case SymmetryClass::asymmetric:
      return "asymmetric";
  }
  return "unknown";
}

SymmetryClass classify_symmetry(const DeltaPair& pot) {
  if (pot.is_free()) throw InvalidParameters("free particle has no symmetry class");
  const double scale = std::max(std::abs(pot.v1), std::abs(pot.v2));
  if (std::abs(pot.v1 - pot.v2) <= kSymmetryTolerance * scale) {
    return pot.v1 > 0.0 ? SymmetryClass::symmetric_barriers : SymmetryClass::symmetric_wells;
  }
  if (std::abs(pot.v1 + pot.v2) <= kSymmetryTolerance * scale) return SymmetryClass::antisymmetric;
  return SymmetryClass::asymmetric;
}

Complex resonance_residual(const DeltaPair& pot, Complex k) noexcept {
  return (2.0 * kI * k - pot.v1) * (2.0 * kI * k - pot.v2) - pot.v1 * pot.v2 * std::exp(2.0 * kI * k * pot.a);
}

Complex resonance_residual_derivative(const DeltaPair& pot, Complex k) noexcept {
  return 2.0 * kI * (2.0 * kI * k - pot.v2) + 2.0 * kI * (2.0 * kI * k - pot.v1) -
         2.0 * kI * pot.a * pot.v1 * pot.v2 * std::exp(2.0 * kI * k * pot.a);
}

std::vector<ResonanceEntry> resonances(const DeltaPair& pot, int n_max, const SearchOptions& opts) {
  validate(pot);
  require_count(n_max);
  if (pot.is_free()) throw InvalidParameters("free particle has no resonances");

  const double k_max = opts.k_max.value_or((n_max + 2) * kPi / pot.a);
  const double depth = opts.k_im_max.value_or(pole_chain_depth(pot, k_max) + 1.0 / pot.a);
  const Rectangle rect{0.05, k_max, -depth, kSeedImTop};

  const ComplexFunction f = [pot](Complex k) { return resonance_residual(pot, k); };
  const ComplexFunction df = [pot](Complex k) { return resonance_residual_derivative(pot, k); };
  const double tiny = opts.tol.tol_merge;
  const RootFilter accept = [tiny](Complex k) {
    return std::abs(k) > tiny && k.real() > 0.0 && k.imag() < 0.0 && energy_of_k(k).real() > 0.0;
  };

  const std::vector<RootFindReport> roots = complex_search(f, df, rect, kPi / pot.a, opts, accept);

  std::vector<ResonanceEntry> out;
  for (const RootFindReport& r : roots) {
    ResonanceEntry e;
    e.k = r.root;
    e.energy = energy_of_k(r.root);
    e.width = width_of_k(r.root);
    e.residual = r.residual;
    e.t_at_peak = coefficients(pot, e.energy.real()).transmission;
    out.push_back(e);
  }
  std::stable_sort(out.begin(), out.end(), [](const ResonanceEntry& x, const ResonanceEntry& y) {
    return x.energy.real() < y.energy.real();
  });
  if (out.size() < static_cast<std::size_t>(n_max)) {
    throw SearchIncomplete("found " + std::to_string(out.size()) + " of " + std::to_string(n_max) +
                               " resonances in the search rectangle",
                           out.size(), static_cast<std::size_t>(n_max));
  }
  out.resize(static_cast<std::size_t>(n_max));
  return out;
}

Complex pt_residual(const DeltaPair& pot, Complex k) noexcept {
  const Complex ika = kI * k * pot.a;
  return 2.0 * kI * k * (pot.v1 * std::exp(-ika) + pot.v2 * std::exp(ika)) +
         2.0 * kI * pot.v1 * pot.v2 * std::sin(k * pot.a);
}

Complex pt_residual_derivative(const DeltaPair& pot, Complex k) noexcept {
  const Complex ika = kI * k * pot.a;
  const Complex em = std::exp(-ika);
  const Complex ep = std::exp(ika);
  return 2.0 * kI * (pot.v1 * em + pot.v2 * ep) + 2.0 * k * pot.a * (pot.v1 * em - pot.v2 * ep) +
         2.0 * kI * pot.a * pot.v1 * pot.v2 * std::cos(k * pot.a);
}

std::vector<PTEntry> perfect_transmission_energies(const DeltaPair& pot, int n_max, const SearchOptions& opts) {
  validate(pot);
  require_count(n_max);
  const SymmetryClass sym = classify_symmetry(pot);
  const std::size_t wanted = static_cast<std::size_t>(n_max);
  std::vector<PTEntry> out;

  if (sym == SymmetryClass::antisymmetric) {
    for (int n = 1; n <= n_max; ++n) {
      out.push_back(make_pt_entry(pot, pot, Complex(n * kPi / pot.a, 0.0), sym));
    }
    return out;
  }

  if (sym != SymmetryClass::asymmetric) {
    // One root per branch ((n - 1/2) pi/a, (n + 1/2) pi/a); branch 0 starts at 0+.
    const DeltaPair sym_pot{pot.v1, pot.v1, pot.a};
    const RealFunction g = [sym_pot](double k) { return symmetric_pt_condition(sym_pot, k); };
    for (int n = 0; out.size() < wanted; ++n) {
      const double lo = (n == 0) ? 1e-9 / pot.a : (n - 0.5) * kPi / pot.a;
      const double hi = (n + 0.5) * kPi / pot.a;
      const double g_lo = g(lo);
      const double g_hi = g(hi);
      if (g_lo == 0.0 || g_hi == 0.0 || (g_lo > 0.0) == (g_hi > 0.0)) continue;
      const RootFindReport r = bisect(g, Bracket{lo, hi, g_lo, g_hi}, 0.0);
      out.push_back(make_pt_entry(pot, pot, r.root, sym));
    }
    return out;
  }

  const DeltaPair oriented = (std::abs(pot.v1) >= std::abs(pot.v2)) ? pot : pot.mirrored();
  const double k_max = opts.k_max.value_or((n_max + 2) * kPi / pot.a);
  double depth = 1.0 / pot.a;
  if (oriented.v2 != 0.0) depth += std::log(std::abs(oriented.v1 / oriented.v2)) / (2.0 * pot.a);
  depth = opts.k_im_max.value_or(depth);
  const Rectangle rect{0.05, k_max, -depth, kSeedImTop};

  const ComplexFunction f = [oriented](Complex k) { return pt_residual(oriented, k); };
  const ComplexFunction df = [oriented](Complex k) { return pt_residual_derivative(oriented, k); };
  const double tiny = opts.tol.tol_merge;
  const RootFilter accept = [tiny](Complex k) {
    return std::abs(k) > tiny && k.real() > 0.0 && k.imag() < 0.0 && energy_of_k(k).real() > 0.0;
  };

  for (const RootFindReport& r : complex_search(f, df, rect, kPi / pot.a, opts, accept)) {
    PTEntry e = make_pt_entry(pot, oriented, r.root, sym);
    e.residual = r.residual;
    out.push_back(e);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PTEntry& x, const PTEntry& y) { return x.energy.real() < y.energy.real(); });
  if (out.size() < wanted) {
    throw SearchIncomplete("found " + std::to_string(out.size()) + " of " + std::to_string(n_max) +
                               " perfect-transmission energies in the search rectangle",
                           out.size(), wanted);
  }
  out.resize(wanted);
  return out;
}

std::vector<double> hardbox_even_eigenvalues(double v0, double a, int n_max) {
  if (!(a > 0.0) || !std::isfinite(v0)) throw InvalidParameters("hard box needs a > 0 and finite v0");
  require_count(n_max);

  // Shoot from the wall at -a with psi = 0, psi' = 1 to x = 0-. An even state
  // has psi'(0+) = -psi'(0-), so the delta jump psi'(0+) - psi'(0-) = v0 psi(0)
  // leaves the mismatch 2 psi'(0-) + v0 psi(0).
  const RealFunction mismatch = [v0, a](double k) {
    const double psi = std::sin(k * a) / k;
    const double dpsi = std::cos(k * a);
    return 2.0 * dpsi + v0 * psi;
  };

  // Even roots are at least pi/(2a) apart, so an eighth of that never holds two.
  const double step = kPi / (16.0 * a);
  const double k_lo = 1e-9 / a;
  std::vector<double> out;
  double hi = (n_max + 1) * kPi / a;
  double lo = k_lo;
  while (out.size() < static_cast<std::size_t>(n_max)) {
    const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step)) + 1;
    for (const Bracket& b : scan_brackets(mismatch, lo, hi, n)) {
      if (out.size() == static_cast<std::size_t>(n_max)) break;
      const double k = bisect(mismatch, b, 0.0).root.real();
      out.push_back(k * k);
    }
    lo = hi;
    hi += n_max * kPi / a;
  }
  return out;
}

ZeroCurvatureReport zero_curvature_critical(double u0, double a) {
  if (!(u0 > 0.0) || !(a > 0.0)) throw InvalidParameters("zero-curvature check needs u0 > 0 and a > 0");
  const double deviation = u0 * a - 2.0;
  return {std::abs(deviation) <= 1e-9, deviation};
}

}  // namespace dddp
