#include "oracles.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace dddp::oracle {

double plain_bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  if (flo * f(hi) > 0.0) throw std::invalid_argument("plain_bisect: no sign change");
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

LinearAmplitudes amplitudes_by_matching(const DeltaPair& pot, Complex k) {
  // Unknowns x = (B, C, D, F) with
  //   psi = e^{ikx} + B e^{-ikx}         x < 0
  //   psi = C e^{ikx} + D e^{-ikx}        0 < x < a
  //   psi = F e^{ikx}                    x > a
  // and psi'(x+) - psi'(x-) = v psi(x) at each delta.
  const Complex I(0.0, 1.0);
  const Complex ep = std::exp(I * k * pot.a);
  const Complex em = std::exp(-I * k * pot.a);
  std::array<std::array<Complex, 5>, 4> m{};
  // continuity at 0: B - C - D = -1
  m[0] = {1.0, -1.0, -1.0, 0.0, -1.0};
  // jump at 0: ik(C - D) - ik(1 - B) = v1 (1 + B)
  m[1] = {I * k - pot.v1, I * k, -I * k, 0.0, pot.v1 + I * k};
  // continuity at a
  m[2] = {0.0, ep, em, -ep, 0.0};
  // jump at a: ik F ep - ik (C ep - D em) = v2 F ep
  m[3] = {0.0, -I * k * ep, I * k * em, (I * k - pot.v2) * ep, 0.0};

  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    std::swap(m[col], m[piv]);
    if (std::abs(m[col][col]) == 0.0) throw std::runtime_error("singular matching system");
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const Complex factor = m[r][col] / m[col][col];
      for (int c = col; c < 5; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  const Complex b = m[0][4] / m[0][0];
  const Complex f = m[3][4] / m[3][3];
  return {b, f};
}

int winding_count(const std::function<Complex(Complex)>& f, const std::vector<Complex>& polygon, int samples) {
  double total = 0.0;
  Complex prev = f(polygon.front());
  for (std::size_t side = 0; side < polygon.size(); ++side) {
    const Complex from = polygon[side];
    const Complex to = polygon[(side + 1) % polygon.size()];
    for (int i = 1; i <= samples; ++i) {
      const double t = static_cast<double>(i) / samples;
      const Complex cur = f(from + t * (to - from));
      total += std::arg(cur / prev);
      prev = cur;
    }
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

int winding_count(const std::function<Complex(Complex)>& f, double re_lo, double re_hi, double im_lo,
                  double im_hi, int samples) {
  return winding_count(f,
                       {Complex(re_lo, im_lo), Complex(re_hi, im_lo), Complex(re_hi, im_hi), Complex(re_lo, im_hi)},
                       samples);
}

Complex pole_condition(const DeltaPair& pot, Complex k) {
  const Complex I(0.0, 1.0);
  return (2.0 * I * k - pot.v1) * (2.0 * I * k - pot.v2) - pot.v1 * pot.v2 * std::exp(2.0 * I * k * pot.a);
}

Complex reflection_zero_condition(const DeltaPair& pot, Complex k) {
  const Complex I(0.0, 1.0);
  return 2.0 * I * k * (pot.v1 * std::exp(-I * k * pot.a) + pot.v2 * std::exp(I * k * pot.a)) +
         2.0 * I * pot.v1 * pot.v2 * std::sin(k * pot.a);
}

double symmetric_pt_root(double v0, double a, int n) {
  const double pi = std::numbers::pi;
  const auto g = [v0, a](double k) { return v0 * std::sin(k * a) + 2.0 * k * std::cos(k * a); };
  // For barriers the n-th root lies in ((n - 1/2) pi/a, n pi/a); for wells the
  // roots lie in (n pi/a, (n + 1/2) pi/a), plus one in (0, pi/(2a)) when
  // u0 a < 2.
  double lo, hi;
  if (v0 > 0.0) {
    lo = (n - 0.5) * pi / a;
    hi = n * pi / a;
  } else {
    const bool low_root = -v0 * a < 2.0;
    const int m = low_root ? n - 1 : n;
    lo = m * pi / a;
    hi = (m + 0.5) * pi / a;
    if (m == 0) lo = 1e-9 / a;
  }
  return plain_bisect(g, lo, hi);
}

}  // namespace dddp::oracle
