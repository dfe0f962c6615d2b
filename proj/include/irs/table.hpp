// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace irs {

/// Numeric result table written as CSV: optional `# ` provenance lines, a header row,
/// comma separators, '.' decimals, LF endings, 9 significant digits.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> provenance;

  std::size_t column(const std::string& name) const;
  void write_csv(std::ostream& out) const;
  void write_csv(const std::filesystem::path& path) const;
};

/// "%.9g" in the C locale.
std::string format_sig9(double value);

/// Value rounded to 9 significant digits (what format_sig9 prints, read back).
double round_sig9(double value);

}  // namespace irs
