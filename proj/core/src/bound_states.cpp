#include "dddp/bound_states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dddp/errors.hpp"

namespace dddp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// Root of f in (0, p_edge) when f has sign `near_zero_sign` just above p = 0
// and the opposite sign at p_edge. The lower end is walked down geometrically
// until the expected sign shows; if the root is below ~1e-15 p_edge the
// linearised estimate is returned instead.
double small_root(const RealFunction& f, double p_edge, int near_zero_sign, double linear_estimate,
                  const Tolerances& tol) {
  const double f_edge = f(p_edge);
  for (double p = 1e-3 * p_edge; p > 1e-15 * p_edge; p *= 1e-2) {
    const double fp = f(p);
    if (sign_of(fp) == near_zero_sign) {
      return bisect(f, Bracket{p, p_edge, fp, f_edge}, tol.tol_x).root.real();
    }
  }
  return linear_estimate;
}

SpectrumEntry make_bound_entry(const RealFunction& f, double p) {
  SpectrumEntry e;
  e.kind = SpectrumKind::bound;
  e.energy = Complex(-p * p, 0.0);
  e.k = Complex(0.0, p);
  e.t_at_real_part = std::numeric_limits<double>::quiet_NaN();
  e.residual = std::abs(f(p));
  return e;
}

}  // namespace

double bound_state_residual(const DeltaPair& pot, double p) noexcept {
  const double x = 2.0 * p * pot.a;
  // Near p = 0 the product form cancels; far out the expanded form loses the
  // e^{-2pa} splitting of nearly degenerate levels.
  if (x < 1.0) return 4.0 * p * p + 2.0 * p * (pot.v1 + pot.v2) - pot.v1 * pot.v2 * std::expm1(-x);
  return (2.0 * p + pot.v1) * (2.0 * p + pot.v2) - pot.v1 * pot.v2 * std::exp(-x);
}

double bound_state_residual(const WellPair& well, double p) noexcept {
  return bound_state_residual(well.as_delta_pair(), p);
}

std::vector<SpectrumEntry> bound_states(const DeltaPair& pot, const Tolerances& tol) {
  validate(pot);
  if (pot.is_free()) throw InvalidParameters("free particle has no bound states");

  const RealFunction f = [pot](double p) { return bound_state_residual(pot, p); };
  const double u1 = -pot.v1;
  const double u2 = -pot.v2;
  const double a = pot.a;
  // f(p) = 2 p s + O(p^2) near p = 0.
  const double s = pot.v1 + pot.v2 + a * pot.v1 * pot.v2;
  const double curvature = a * a * pot.v1 * pot.v2 - 2.0;

  std::vector<double> roots;
  if (u1 >= 0.0 && u2 >= 0.0) {
    const double deep = std::max(u1, u2);
    const double shallow = std::min(u1, u2);
    const double p_top = 0.5 * (u1 + u2) + 1.0;
    const double lo = 0.5 * deep;
    roots.push_back(bisect(f, Bracket{lo, p_top, f(lo), f(p_top)}, tol.tol_x).root.real());

    if (shallow > 0.0 && a > second_level_threshold(u1, u2) * (1.0 + 4.0 * kEps)) {
      roots.push_back(small_root(f, 0.5 * shallow, +1, s / curvature, tol));
    }
  } else if (u1 > 0.0 || u2 > 0.0) {
    // One well and one barrier: a single level below u/2 when s < 0.
    const double depth = std::max(u1, u2);
    if (s < -4.0 * kEps * (std::abs(pot.v1) + std::abs(pot.v2))) {
      roots.push_back(small_root(f, 0.5 * depth, -1, s / curvature, tol));
    }
  }

  std::vector<SpectrumEntry> out;
  out.reserve(roots.size());
  for (double p : roots) out.push_back(make_bound_entry(f, p));
  std::sort(out.begin(), out.end(),
            [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.energy.real() < y.energy.real(); });
  return out;
}

std::vector<SpectrumEntry> bound_states(const WellPair& well, const Tolerances& tol) {
  validate(well);
  return bound_states(well.as_delta_pair(), tol);
}

double merged_delta_energy(double depth1, double depth2) {
  const double total = depth1 + depth2;
  if (!(total > 0.0)) throw InvalidParameters("merged delta needs U1 + U2 > 0");
  return -0.25 * total * total;
}

std::optional<double> wall_limit_eigenvalue(double u1, double a, const Tolerances& tol) {
  if (!(u1 > 0.0) || !(a > 0.0)) throw InvalidParameters("wall limit needs u1 > 0 and a > 0");
  if (!(u1 * a > 1.0)) return std::nullopt;
  // 1 - 2p/u1 - e^{-2pa}, positive near 0 exactly when u1 a > 1.
  const RealFunction g = [u1, a](double p) { return -2.0 * p / u1 - std::expm1(-2.0 * p * a); };
  const double estimate = (a - 1.0 / u1) / (a * a);
  const double p = small_root(g, 0.5 * u1, +1, estimate, tol);
  return -p * p;
}

std::pair<double, std::optional<double>> symmetric_factored_roots(double u0, double a,
                                                                  const Tolerances& tol) {
  if (!(u0 > 0.0) || !(a > 0.0)) throw InvalidParameters("symmetric wells need u0 > 0 and a > 0");

  const RealFunction even = [u0, a](double p) { return 2.0 * p / u0 - 1.0 - std::exp(-p * a); };
  const double lo = 0.5 * u0;
  const double p0 = bisect(even, Bracket{lo, u0, even(lo), even(u0)}, tol.tol_x).root.real();

  std::optional<double> e1;
  if (u0 * a > 2.0 * (1.0 + 4.0 * kEps)) {
    const RealFunction odd = [u0, a](double p) { return -2.0 * p / u0 - std::expm1(-p * a); };
    const double estimate = 2.0 * (a - 2.0 / u0) / (a * a);
    const double p1 = small_root(odd, 0.5 * u0, +1, estimate, tol);
    e1 = -p1 * p1;
  }
  return {-p0 * p0, e1};
}

double second_level_threshold(double u1, double u2) {
  if (!(u1 > 0.0) || !(u2 > 0.0)) throw InvalidParameters("threshold needs u1 > 0 and u2 > 0");
  return 1.0 / u1 + 1.0 / u2;
}

std::pair<double, double> large_separation_limits(double u1, double u2) {
  if (!(u1 > 0.0) || !(u2 > 0.0)) throw InvalidParameters("limits need u1 > 0 and u2 > 0");
  const double deep = std::max(u1, u2);
  const double shallow = std::min(u1, u2);
  return {-0.25 * deep * deep, -0.25 * shallow * shallow};
}

std::vector<LevelCurvePoint> level_sweep(const WellPair& fixed, SweepParameter parameter, double lo,
                                         double hi, std::size_t n, const Tolerances& tol) {
  if (!(lo < hi) || n < 2) throw InvalidParameters("sweep needs lo < hi and n >= 2");

  std::vector<LevelCurvePoint> out;
  out.reserve(n);
  int next_branch = 0;
  const LevelCurvePoint* prev = nullptr;

  for (std::size_t i = 0; i < n; ++i) {
    LevelCurvePoint point;
    point.sweep_value = (i == n - 1) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);

    WellPair well = fixed;
    if (parameter == SweepParameter::separation) {
      well.a = point.sweep_value;
    } else {
      well.u2 = point.sweep_value;
    }

    try {
      for (const SpectrumEntry& e : bound_states(well, tol)) point.levels.push_back(e.energy.real());
    } catch (const Error& err) {
      point.error = err.what();
    }

    // Nearest-energy pairing with the previous point's branches.
    point.branches.assign(point.levels.size(), -1);
    if (prev != nullptr && !prev->levels.empty() && !point.levels.empty()) {
      const auto& pl = prev->levels;
      const auto& cl = point.levels;
      if (cl.size() == 2 && pl.size() == 2) {
        const double keep = std::abs(cl[0] - pl[0]) + std::abs(cl[1] - pl[1]);
        const double swap = std::abs(cl[0] - pl[1]) + std::abs(cl[1] - pl[0]);
        if (keep <= swap) {
          point.branches = {prev->branches[0], prev->branches[1]};
        } else {
          point.branches = {prev->branches[1], prev->branches[0]};
        }
      } else {
        // One side has a single level: it goes to the closest partner.
        std::size_t best_c = 0;
        std::size_t best_p = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < cl.size(); ++c) {
          for (std::size_t p = 0; p < pl.size(); ++p) {
            const double d = std::abs(cl[c] - pl[p]);
            if (d < best) {
              best = d;
              best_c = c;
              best_p = p;
            }
          }
        }
        point.branches[best_c] = prev->branches[best_p];
      }
    }
    for (int& b : point.branches) {
      if (b < 0) b = next_branch++;
    }

    out.push_back(std::move(point));
    prev = &out.back();
  }
  return out;
}

}  // namespace dddp
