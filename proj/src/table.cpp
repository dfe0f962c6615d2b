// SPDX-License-Identifier: Apache-2.0

#include "irs/table.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include "irs/errors.hpp"

namespace irs {

std::string format_sig9(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

double round_sig9(double value) {
  const std::string text = format_sig9(value);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw Error("table: no column named " + name);
}

void Table::write_csv(std::ostream& out) const {
  for (const std::string& line : provenance) out << "# " << line << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_sig9(row[i]);
    out << '\n';
  }
}

void Table::write_csv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_csv(out);
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace irs
