#include "table1.hpp"

#include <cmath>

#include "dddp/complex_spectra.hpp"

namespace dddp::cli {

namespace {

using C = Complex;

Table1Cell compare(const std::string& row, int column, std::string quantity, double expected, double computed,
                   double tolerance, bool gating = true) {
  Table1Cell c{row, column, std::move(quantity), expected, computed, tolerance, gating, false};
  c.pass = std::abs(computed - expected) <= tolerance;
  return c;
}

}  // namespace

const std::vector<Table1Row>& table1_fixture() {
  static const std::vector<Table1Row> rows = {
      {{-3.0, -2.9, 1.0},
       "-3,-2.9,1",
       {C(15.66, -9.98), C(52.61, -25.38), C(109.90, -43.37), C(187.27, -63.17)},
       {0.9129, 0.9745, 0.9894, 0.9946},
       {C(19.25, -0.14), C(58.73, -0.25), C(117.95, -0.36), C(196.90, -0.47)},
       {0.9998, 0.9999, 0.9999, 0.9999}},
      {{-3.0, -3.0, 1.0},
       "-3,-3,1",
       {C(15.68, -9.84), C(52.65, -25.13), C(109.95, -43.01), C(187.33, -62.70)},
       {0.9134, 0.9744, 0.9893, 0.9945},
       {C(19.2074, 0), C(58.6851, 0), C(117.903, 0), C(196.859, 0)},
       {1.0, 1.0, 1.0, 1.0}},
      {{-3.0, 2.9, 1.0},
       "-3,2.9,1",
       {C(7.82, -4.74), C(34.50, -17.75), C(81.66, -34.42), C(149.01, -53.30)},
       {0.8649, 0.9599, 0.9847, 0.9927},
       {C(9.82, -0.08), C(39.43, -0.20), C(88.77, -0.31), C(157.86, -0.42)},
       {0.9997, 0.9999, 0.9999, 0.9999}},
      {{-3.0, 3.0, 1.0},
       "-3,3,1",
       {C(7.91, -4.69), C(34.63, -17.57), C(81.81, -34.12), C(149.16, -52.89)},
       {0.8680, 0.9600, 0.9847, 0.9927},
       {C(9.8696, 0), C(39.4784, 0), C(88.8264, 0), C(157.91, 0)},
       {1.0, 1.0, 1.0, 1.0}},
      {{3.0, 2.9, 1.0},
       "3,2.9,1",
       {C(3.97, -1.79), C(21.41, -11.23), C(58.50, -26.14), C(115.81, -43.91)},
       {0.8655, 0.9381, 0.9775, 0.9900},
       {C(4.70, -0.04), C(24.99, -0.14), C(64.56, -0.25), C(123.81, -0.36)},
       {0.9996, 0.9999, 0.9999, 0.9999}},
      {{3.0, 3.0, 1.0},
       "3,3,1",
       {C(4.01, -1.77), C(21.52, -11.11), C(58.64, -25.90), C(115.96, -43.56)},
       {0.8696, 0.9387, 0.9775, 0.9900},
       {C(4.729, 0), C(25.0365, 0), C(64.6169, 0), C(123.867, 0)},
       {1.0, 1.0, 1.0, 1.0}},
      {{30.0, 30.0, 1.0},
       "30,30,1",
       {C(8.68, -0.10), C(34.88, -0.80), C(78.93, -2.54), C(141.28, -5.56)},
       {0.9997, 0.9992, 0.9987, 0.9983},
       {C(8.6880, 0), C(34.9042, 0), C(79.0282, 0), C(141.5120, 0)},
       {1.0, 1.0, 1.0, 1.0}},
      {{30.0, 29.0, 1.0},
       "30,29,1",
       {C(8.66, -0.10), C(34.81, -0.82), C(78.80, -2.61), C(141.08, -5.70)},
       {0.9986, 0.9982, 0.9977, 0.9975},
       {C(8.67, -0.003), C(34.83, -0.002), C(78.90, -0.07), C(141.32, -0.15)},
       {0.9988, 0.9990, 0.9991, 0.9993}},
  };
  return rows;
}

Table1Result reproduce_table1(const Table1Tolerances& tol) {
  Table1Result result;
  for (const Table1Row& row : table1_fixture()) {
    const auto res = resonances(row.pot, 4);
    const auto pt = perfect_transmission_energies(row.pot, 4);
    const bool asymmetric = classify_symmetry(row.pot) == SymmetryClass::asymmetric;
    for (int n = 0; n < 4; ++n) {
      const int col = n + 1;
      auto& cells = result.cells;
      cells.push_back(compare(row.label, col, "resonance_energy", row.resonance[n].real(), res[n].energy.real(),
                              tol.resonance_energy));
      cells.push_back(compare(row.label, col, "resonance_half_width", -row.resonance[n].imag(),
                              0.5 * res[n].width, tol.resonance_half_width));
      cells.push_back(
          compare(row.label, col, "t_resonance", row.t_resonance[n], res[n].t_at_peak, tol.transmission));
      cells.push_back(compare(row.label, col, "pt_energy", row.pt[n].real(), pt[n].energy.real(), tol.pt_energy));
      if (asymmetric) {
        cells.push_back(compare(row.label, col, "pt_half_width", -row.pt[n].imag(), -pt[n].energy.imag(),
                                tol.pt_half_width, false));
      }
      cells.push_back(compare(row.label, col, "t_pt", row.t_pt[n], pt[n].t_at_energy, tol.transmission));
    }
  }
  result.all_gating_pass = true;
  for (const Table1Cell& c : result.cells) {
    if (c.gating && !c.pass) result.all_gating_pass = false;
  }
  return result;
}

Table table1_report(const Table1Result& result) {
  Table t;
  t.columns = {{"row"},      {"column"}, {"quantity"}, {"expected"}, {"computed"},
               {"delta"},    {"tol"},    {"gating"},   {"status"}};
  for (const Table1Cell& c : result.cells) {
    t.add_row({c.row, static_cast<double>(c.column), c.quantity, c.expected, c.computed, c.computed - c.expected,
               c.tolerance, std::string(c.gating ? "yes" : "no"), std::string(c.pass ? "pass" : "FAIL")});
  }
  return t;
}

}  // namespace dddp::cli
