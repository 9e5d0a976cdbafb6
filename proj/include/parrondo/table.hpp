#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace parrondo {

// A CSV file with a '#'-prefixed metadata block:
//
//   # kind=timeseries
//   # preset=figure1
//   t,expected_payoff
//   0,0
//
// Numbers are written in shortest round-trip form, so reading a written
// table reproduces it exactly.
struct OutputTable {
  enum class Kind { timeseries, distribution };

  Kind kind = Kind::timeseries;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_meta(std::string key, std::string value) {
    metadata.emplace_back(std::move(key), std::move(value));
  }
  // Value for `key`, or empty when absent.
  std::string meta(const std::string& key) const;

  bool operator==(const OutputTable&) const = default;
};

std::string format_number(double v);

void write_csv(std::ostream& os, const OutputTable& table);
// Throws std::runtime_error on malformed input.
OutputTable read_csv(std::istream& is);

// Header row and data rows only, exactly as write_csv emits them.
std::string data_section(const OutputTable& table);

}  // namespace parrondo
