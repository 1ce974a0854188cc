#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dddp/bound_states.hpp"
#include "dddp/complex_spectra.hpp"
#include "dddp/errors.hpp"
#include "dddp/scattering.hpp"
#include "table.hpp"
#include "table1.hpp"

namespace dddp::cli {

namespace {

enum class Command { none, scan, bound, resonances, pt, r0, sweep, table1, hardbox };

struct RunConfig {
  Command command = Command::none;
  std::optional<double> v1, v2, u1, u2;
  double a = 1.0;
  bool a_given = false;
  double emin = 0.0;
  double emax = 0.0;
  int n = 0;
  std::string param = "a";
  double lo = 0.0;
  double hi = 0.0;
  double v0 = 0.0;
  Format format = Format::csv;
  std::string out_path;
  Tolerances tol;
  double tol_crit = kDefaultCriticalTolerance;
};

struct VerificationFailure {
  Table table;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameters(message);
}

// Signed pair from --v1/--v2, or from well depths --u1/--u2. Mixing the two is
// rejected.
DeltaPair signed_pair(const RunConfig& c) {
  const bool has_v = c.v1 || c.v2;
  const bool has_u = c.u1 || c.u2;
  require(!(has_v && has_u), "give either --v1/--v2 or --u1/--u2, not both");
  DeltaPair pot;
  if (has_u) {
    pot = WellPair{c.u1.value_or(0.0), c.u2.value_or(0.0), c.a}.as_delta_pair();
  } else {
    pot = DeltaPair{c.v1.value_or(0.0), c.v2.value_or(0.0), c.a};
  }
  validate(pot);
  return pot;
}

WellPair well_pair(const RunConfig& c) {
  require(!(c.v1 || c.v2), "this command takes well depths --u1/--u2");
  require(c.u1.has_value(), "--u1 is required");
  WellPair w{*c.u1, c.u2.value_or(*c.u1), c.a};
  validate(w);
  return w;
}

void validate_tolerances(const Tolerances& t) {
  require(t.tol_x > 0.0 && t.tol_residual > 0.0 && t.tol_merge > 0.0, "tolerances must be positive");
  require(t.max_iter >= 1, "--max-iter must be at least 1");
}

Table cmd_scan(const RunConfig& c) {
  const DeltaPair pot = signed_pair(c);
  require(std::isfinite(c.emin) && std::isfinite(c.emax) && c.emin < c.emax, "need --emin < --emax");
  require(c.n >= 2, "--n must be at least 2");
  Table t;
  t.columns = {{"E"}, {"R"}, {"T"}};
  const double step = (c.emax - c.emin) / (c.n - 1);
  for (int i = 0; i < c.n; ++i) {
    const double e = i + 1 == c.n ? c.emax : c.emin + i * step;
    if (e > 0.0) {
      const ScanRow r = coefficients(pot, e);
      t.add_row({e, r.reflection, r.transmission});
    } else if (e == 0.0) {
      const ScanRow r = zero_energy_coefficients(pot);
      t.add_row({e, r.reflection, r.transmission});
    } else {
      double tr = 0.0;
      try {
        tr = transmission_negative_energy(pot, e);
      } catch (const PoleHit&) {
        tr = INFINITY;
      }
      t.add_row({e, std::monostate{}, tr});
    }
  }
  return t;
}

Table cmd_bound(const RunConfig& c) {
  const DeltaPair pot = signed_pair(c);
  const auto levels = bound_states(pot, c.tol);
  Cell threshold;
  if (pot.v1 < 0.0 && pot.v2 < 0.0) threshold = second_level_threshold(-pot.v1, -pot.v2);
  Table t;
  t.columns = {{"level"}, {"energy"}, {"p"}, {"residual"}, {"count"}, {"threshold"}};
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double e = levels[i].energy.real();
    t.add_row({static_cast<double>(i), e, std::sqrt(-e), levels[i].residual, static_cast<double>(levels.size()),
               threshold});
  }
  return t;
}

SearchOptions search_options(const RunConfig& c) {
  SearchOptions o;
  o.tol = c.tol;
  return o;
}

Table cmd_resonances(const RunConfig& c) {
  const DeltaPair pot = signed_pair(c);
  require(c.n >= 1, "--n must be at least 1");
  const auto res = resonances(pot, c.n, search_options(c));
  Table t;
  t.columns = {{"n"}, {"energy", true}, {"width"}, {"k", true}, {"t"}, {"residual"}};
  for (std::size_t i = 0; i < res.size(); ++i) {
    t.add_row({static_cast<double>(i + 1), res[i].energy, res[i].width, res[i].k, res[i].t_at_peak,
               res[i].residual});
  }
  return t;
}

Table cmd_pt(const RunConfig& c) {
  const DeltaPair pot = signed_pair(c);
  require(c.n >= 1, "--n must be at least 1");
  const auto pts = perfect_transmission_energies(pot, c.n, search_options(c));
  Table t;
  t.columns = {{"n"}, {"energy", true}, {"k", true}, {"t"}, {"symmetry"}, {"residual"}};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    t.add_row({static_cast<double>(i + 1), pts[i].energy, pts[i].k, pts[i].t_at_energy,
               std::string(to_string(pts[i].symmetry)), pts[i].residual});
  }
  return t;
}

Table cmd_r0(const RunConfig& c) {
  const WellPair w = well_pair(c);
  require(c.tol_crit > 0.0, "--tol-crit must be positive");
  const ZeroEnergyClass z = zero_energy_reflection(w, c.tol_crit);
  Table t;
  t.columns = {{"case"}, {"rho0"}, {"r0"}};
  t.add_row({std::string(to_string(z.case_tag)), z.rho0, z.r0});
  return t;
}

Table cmd_sweep(const RunConfig& c) {
  require(c.n >= 2, "--n must be at least 2");
  require(std::isfinite(c.lo) && std::isfinite(c.hi) && c.lo < c.hi, "need --lo < --hi");
  require(c.u1.has_value(), "--u1 is required");
  SweepParameter param;
  if (c.param == "a") {
    param = SweepParameter::separation;
    require(c.lo > 0.0, "separation sweep needs --lo > 0");
  } else {
    param = SweepParameter::depth2;
    require(c.lo >= 0.0, "depth sweep needs --lo >= 0");
  }
  const WellPair fixed{*c.u1, c.u2.value_or(*c.u1), c.a};
  require(std::isfinite(fixed.u1) && fixed.u1 >= 0.0 && std::isfinite(fixed.u2) && fixed.u2 >= 0.0 &&
              std::isfinite(fixed.a) && fixed.a > 0.0,
          "well depths must be >= 0 and a > 0");
  const auto points = level_sweep(fixed, param, c.lo, c.hi, static_cast<std::size_t>(c.n), c.tol);
  Table t;
  t.columns = {{"sweep_value"}, {"E0"}, {"E1"}};
  for (const LevelCurvePoint& p : points) {
    Cell e0, e1;
    if (!p.levels.empty()) e0 = p.levels[0];
    if (p.levels.size() > 1) e1 = p.levels[1];
    t.add_row({p.sweep_value, e0, e1});
  }
  return t;
}

Table cmd_hardbox(const RunConfig& c) {
  require(c.n >= 1, "--n must be at least 1");
  const auto eig = hardbox_even_eigenvalues(c.v0, c.a, c.n);
  Table t;
  t.columns = {{"n"}, {"energy"}};
  for (std::size_t i = 0; i < eig.size(); ++i) t.add_row({static_cast<double>(i + 1), eig[i]});
  return t;
}

Table dispatch(const RunConfig& c) {
  validate_tolerances(c.tol);
  switch (c.command) {
    case Command::scan:
      return cmd_scan(c);
    case Command::bound:
      return cmd_bound(c);
    case Command::resonances:
      return cmd_resonances(c);
    case Command::pt:
      return cmd_pt(c);
    case Command::r0:
      return cmd_r0(c);
    case Command::sweep:
      return cmd_sweep(c);
    case Command::hardbox:
      return cmd_hardbox(c);
    case Command::table1: {
      const Table1Result r = reproduce_table1();
      Table t = table1_report(r);
      if (!r.all_gating_pass) throw VerificationFailure{std::move(t)};
      return t;
    }
    case Command::none:
      break;
  }
  throw InvalidParameters("no subcommand given");
}

void add_pair_options(CLI::App* sub, RunConfig& c, bool wells, bool signed_strengths) {
  if (signed_strengths) {
    sub->add_option("--v1", c.v1, "strength of the delta at x = 0 (negative = well)");
    sub->add_option("--v2", c.v2, "strength of the delta at x = a");
  }
  if (wells) {
    sub->add_option("--u1", c.u1, "depth of the well at x = 0");
    sub->add_option("--u2", c.u2, "depth of the well at x = a (default: u1)");
  }
  sub->add_option("--a", c.a, "separation")->capture_default_str();
}

// Writes the table to --out or the given stream. The table is rendered first so
// nothing partial is written on error.
void emit(const Table& t, const RunConfig& c, std::ostream& out) {
  std::ostringstream buf;
  write_table(t, c.format, buf);
  if (c.out_path.empty()) {
    out << buf.str();
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw InvalidParameters("cannot open --out " + c.out_path);
  f << buf.str();
  if (!f) throw InvalidParameters("write to " + c.out_path + " failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Spectra and scattering of the double Dirac delta potential", "dddp"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  app.add_option("--format", c.format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("csv");
  app.add_option("--out", c.out_path, "output file (default: standard output)");
  app.add_option("--tol-x", c.tol.tol_x, "bracket width tolerance")->capture_default_str();
  app.add_option("--tol-residual", c.tol.tol_residual, "Newton residual tolerance")->capture_default_str();
  app.add_option("--tol-merge", c.tol.tol_merge, "duplicate-root merge distance")->capture_default_str();
  app.add_option("--max-iter", c.tol.max_iter, "iteration cap")->capture_default_str();
  app.add_option("--tol-crit", c.tol_crit, "critical-manifold tolerance for r0")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "R(E), T(E) on a uniform energy grid");
  add_pair_options(scan, c, true, true);
  scan->add_option("--emin", c.emin, "lowest energy")->required();
  scan->add_option("--emax", c.emax, "highest energy")->required();
  scan->add_option("--n", c.n, "number of grid points")->required();

  auto* bound = app.add_subcommand("bound", "bound-state energies");
  add_pair_options(bound, c, true, true);

  auto* res = app.add_subcommand("resonances", "lowest resonance poles");
  add_pair_options(res, c, false, true);
  res->add_option("--n", c.n, "number of resonances")->default_val(4);

  auto* pt = app.add_subcommand("pt", "lowest perfect-transmission energies");
  add_pair_options(pt, c, false, true);
  pt->add_option("--n", c.n, "number of energies")->default_val(4);

  auto* r0 = app.add_subcommand("r0", "zero-energy reflection of a double well");
  add_pair_options(r0, c, true, false);

  auto* sweep = app.add_subcommand("sweep", "bound-state level curves");
  add_pair_options(sweep, c, true, false);
  sweep->add_option("--param", c.param, "swept parameter")->check(CLI::IsMember({"a", "u2"}))->capture_default_str();
  sweep->add_option("--lo", c.lo, "first sweep value")->required();
  sweep->add_option("--hi", c.hi, "last sweep value")->required();
  sweep->add_option("--n", c.n, "number of sweep points")->required();

  auto* table1 = app.add_subcommand("table1", "reproduce the reference resonance/transmission table");

  auto* hardbox = app.add_subcommand("hardbox", "even eigenvalues of a delta centred in a hard box");
  hardbox->add_option("--v0", c.v0, "delta strength")->required();
  hardbox->add_option("--a", c.a, "half-width of the box")->capture_default_str();
  hardbox->add_option("--n", c.n, "number of eigenvalues")->default_val(4);

  const std::pair<CLI::App*, Command> commands[] = {
      {scan, Command::scan}, {bound, Command::bound}, {res, Command::resonances}, {pt, Command::pt},
      {r0, Command::r0},     {sweep, Command::sweep}, {table1, Command::table1},  {hardbox, Command::hardbox}};

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitArguments;
  }
  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) c.command = cmd;
  }

  try {
    emit(dispatch(c), c, out);
    return kExitOk;
  } catch (const VerificationFailure& f) {
    try {
      emit(f.table, c, out);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
    }
    err << "verification failed\n";
    return kExitVerification;
  } catch (const SearchIncomplete& e) {
    err << "search incomplete (" << e.found() << " of " << e.requested() << "): " << e.what() << '\n';
    return kExitIncomplete;
  } catch (const InvalidParameters& e) {
    err << "invalid arguments: " << e.what() << '\n';
    return kExitArguments;
  } catch (const DomainError& e) {
    err << "invalid arguments: " << e.what() << '\n';
    return kExitArguments;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerification;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace dddp::cli
