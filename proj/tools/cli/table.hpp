#pragma once

// Tabular output shared by all subcommands: CSV with a header row, or a JSON
// array of row objects. Complex columns become name_re,name_im in CSV and
// {"re":..,"im":..} in JSON.

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "dddp/potential.hpp"

namespace dddp::cli {

enum class Format { csv, json };

/// Blank (CSV) / null (JSON), number, text, or complex number.
using Cell = std::variant<std::monostate, double, std::string, Complex>;

struct Column {
  std::string name;
  bool complex = false;
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// 15 significant digits; "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double x);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, Format format, std::ostream& out);

}  // namespace dddp::cli
