#pragma once

// Real-interval and complex-plane root finding shared by the spectrum solvers.

#include <cstddef>
#include <functional>
#include <vector>

#include "dddp/potential.hpp"

namespace dddp {

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<Complex(Complex)>;

struct Tolerances {
  double tol_x = 1e-12;         ///< bisection interval width
  double tol_residual = 1e-10;  ///< |f(root)| for Newton convergence
  double tol_merge = 1e-6;      ///< distance below which two roots are one
  int max_iter = 100;
};

/// A sign-change interval: lo < hi and sign(f_lo) != sign(f_hi).
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

struct RootFindReport {
  Complex root;
  double residual = 0.0;
  int iterations = 0;
  Complex seed;
  bool converged = false;
};

/// Every sign change of f on the uniform n-point grid over [lo, hi], in
/// increasing order. Roots of even multiplicity produce no sign change and are
/// missed. Throws DomainError on a non-finite sample, InvalidParameters on a
/// bad grid.
std::vector<Bracket> scan_brackets(const RealFunction& f, double lo, double hi, std::size_t n);

/// Bisection down to |hi - lo| <= tol_x (or until the midpoint stops moving).
/// The report is always converged for a valid bracket; its residual is |f| at
/// the returned midpoint. Throws InvalidParameters when the bracket has no sign
/// change.
RootFindReport bisect(const RealFunction& f, const Bracket& bracket, double tol_x = Tolerances{}.tol_x);

/// Newton iteration with an analytic derivative. Non-convergence is reported,
/// not thrown; a derivative below 1e-300 in magnitude aborts the seed.
RootFindReport newton_complex(const ComplexFunction& f, const ComplexFunction& df, Complex seed,
                              double tol_residual = Tolerances{}.tol_residual,
                              int max_iter = Tolerances{}.max_iter);

/// Merges roots closer than tol_merge (keeping the first seen) and sorts by
/// real part.
std::vector<Complex> dedupe_and_sort(std::vector<Complex> roots, double tol_merge);

/// As above, but a merged cluster keeps the report with the smallest residual.
std::vector<RootFindReport> dedupe_and_sort(std::vector<RootFindReport> reports, double tol_merge);

}  // namespace dddp
