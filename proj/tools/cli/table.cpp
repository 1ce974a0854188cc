#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace dddp::cli {

namespace {

std::string csv_field(const Cell& cell) {
  if (const auto* x = std::get_if<double>(&cell)) return format_number(*x);
  if (const auto* s = std::get_if<std::string>(&cell)) {
    if (s->find_first_of(",\"\n") == std::string::npos) return *s;
    std::string quoted = "\"";
    for (char ch : *s) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    return quoted + '"';
  }
  return {};
}

// Round-trips through the 15-digit text form so JSON and CSV carry the same
// value.
nlohmann::ordered_json json_number(double x) {
  if (!std::isfinite(x)) return format_number(x);
  const double y = std::strtod(format_number(x).c_str(), nullptr);
  if (y == std::trunc(y) && std::abs(y) < 1e15) return static_cast<long long>(y);
  return y;
}

nlohmann::ordered_json json_value(const Cell& cell) {
  if (const auto* x = std::get_if<double>(&cell)) return json_number(*x);
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* z = std::get_if<Complex>(&cell)) {
    return nlohmann::ordered_json{{"re", json_number(z->real())}, {"im", json_number(z->imag())}};
  }
  return nullptr;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match table columns");
  rows.push_back(std::move(row));
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

void write_csv(const Table& table, std::ostream& out) {
  bool first = true;
  for (const Column& c : table.columns) {
    if (!first) out << ',';
    first = false;
    if (c.complex) {
      out << c.name << "_re," << c.name << "_im";
    } else {
      out << c.name;
    }
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      if (table.columns[i].complex) {
        if (const auto* z = std::get_if<Complex>(&row[i])) {
          out << format_number(z->real()) << ',' << format_number(z->imag());
        } else {
          out << ',';
        }
      } else {
        out << csv_field(row[i]);
      }
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i].name] = json_value(row[i]);
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

void write_table(const Table& table, Format format, std::ostream& out) {
  if (format == Format::json) {
    write_json(table, out);
  } else {
    write_csv(table, out);
  }
}

}  // namespace dddp::cli
