#include "dddp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dddp/errors.hpp"

namespace dddp {

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

double sample(const RealFunction& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw DomainError("non-finite function value at x = " + std::to_string(x));
  }
  return y;
}

}  // namespace

std::vector<Bracket> scan_brackets(const RealFunction& f, double lo, double hi, std::size_t n) {
  if (!(lo < hi) || n < 2) {
    throw InvalidParameters("scan_brackets needs lo < hi and n >= 2");
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  std::vector<Bracket> out;

  double x_prev = lo;
  double f_prev = sample(f, lo);
  for (std::size_t i = 1; i < n; ++i) {
    const double x = (i == n - 1) ? hi : lo + step * static_cast<double>(i);
    const double fx = sample(f, x);
    const int s_prev = sign_of(f_prev);
    const int s = sign_of(fx);
    // A grid point that is an exact zero belongs to the interval ending there
    // (or to the first interval when it sits at lo).
    const bool crossing = (s_prev * s < 0) || (s == 0 && s_prev != 0) || (i == 1 && s_prev == 0 && s != 0);
    if (crossing) out.push_back({x_prev, x, f_prev, fx});
    x_prev = x;
    f_prev = fx;
  }
  return out;
}

RootFindReport bisect(const RealFunction& f, const Bracket& bracket, double tol_x) {
  if (!(bracket.lo < bracket.hi) || sign_of(bracket.f_lo) * sign_of(bracket.f_hi) > 0) {
    throw InvalidParameters("bisect needs lo < hi and a sign change");
  }
  double lo = bracket.lo;
  double hi = bracket.hi;
  double f_lo = bracket.f_lo;
  RootFindReport report;
  report.seed = 0.5 * (lo + hi);
  report.converged = true;

  if (bracket.f_lo == 0.0) {
    report.root = lo;
    return report;
  }
  if (bracket.f_hi == 0.0) {
    report.root = hi;
    return report;
  }

  while (hi - lo > tol_x) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    ++report.iterations;
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if (sign_of(f_mid) == sign_of(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  report.root = root;
  report.residual = std::abs(f(root));
  return report;
}

RootFindReport newton_complex(const ComplexFunction& f, const ComplexFunction& df, Complex seed,
                              double tol_residual, int max_iter) {
  RootFindReport report;
  report.seed = seed;
  Complex z = seed;
  Complex fz = f(z);
  for (int it = 0; it < max_iter; ++it) {
    if (!std::isfinite(fz.real()) || !std::isfinite(fz.imag())) break;
    if (std::abs(fz) <= tol_residual) {
      // One polishing step; keep it only if it helps.
      const Complex dz = df(z);
      if (std::abs(dz) >= 1e-300) {
        const Complex z_next = z - fz / dz;
        const Complex f_next = f(z_next);
        if (std::abs(f_next) < std::abs(fz)) {
          z = z_next;
          fz = f_next;
        }
      }
      report.converged = true;
      break;
    }
    const Complex dz = df(z);
    if (std::abs(dz) < 1e-300) break;
    z -= fz / dz;
    fz = f(z);
    report.iterations = it + 1;
  }
  if (!report.converged && std::abs(fz) <= tol_residual) report.converged = true;
  report.root = z;
  report.residual = std::abs(fz);
  return report;
}

std::vector<Complex> dedupe_and_sort(std::vector<Complex> roots, double tol_merge) {
  std::vector<Complex> kept;
  kept.reserve(roots.size());
  for (const Complex& r : roots) {
    const bool duplicate = std::any_of(kept.begin(), kept.end(),
                                       [&](const Complex& k) { return std::abs(k - r) <= tol_merge; });
    if (!duplicate) kept.push_back(r);
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const Complex& x, const Complex& y) { return x.real() < y.real(); });
  return kept;
}

std::vector<RootFindReport> dedupe_and_sort(std::vector<RootFindReport> reports, double tol_merge) {
  // Best residual first so the survivor of each cluster is the most accurate.
  std::stable_sort(reports.begin(), reports.end(),
                   [](const RootFindReport& x, const RootFindReport& y) { return x.residual < y.residual; });
  std::vector<RootFindReport> kept;
  kept.reserve(reports.size());
  for (const RootFindReport& r : reports) {
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const RootFindReport& k) {
      return std::abs(k.root - r.root) <= tol_merge;
    });
    if (!duplicate) kept.push_back(r);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const RootFindReport& x, const RootFindReport& y) {
    return x.root.real() < y.root.real();
  });
  return kept;
}

}  // namespace dddp
