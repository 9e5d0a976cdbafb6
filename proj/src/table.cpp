#include "parrondo/table.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace parrondo {
namespace {

std::string kind_name(OutputTable::Kind k) {
  return k == OutputTable::Kind::timeseries ? "timeseries" : "distribution";
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

double parse_number(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error("bad number in table: '" + s + "'");
  }
  return v;
}

void write_data(std::ostream& os, const OutputTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) os << ',';
    os << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << format_number(row[i]);
    }
    os << '\n';
  }
}

}  // namespace

std::string OutputTable::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return {};
}

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

void write_csv(std::ostream& os, const OutputTable& table) {
  os << "# kind=" << kind_name(table.kind) << '\n';
  for (const auto& [k, v] : table.metadata) {
    if (k.find('=') != std::string::npos ||
        v.find('\n') != std::string::npos) {
      throw std::invalid_argument("metadata entry '" + k +
                                  "' cannot be written");
    }
    os << "# " << k << '=' << v << '\n';
  }
  write_data(os, table);
}

OutputTable read_csv(std::istream& is) {
  OutputTable table;
  std::string line;
  bool have_kind = false;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.rfind("# ", 0) == 0) {
      if (have_header) throw std::runtime_error("metadata after header row");
      const auto body = line.substr(2);
      const auto eq = body.find('=');
      if (eq == std::string::npos) {
        throw std::runtime_error("metadata line without '=': " + line);
      }
      auto key = body.substr(0, eq);
      auto value = body.substr(eq + 1);
      if (key == "kind" && !have_kind) {
        if (value == "timeseries") {
          table.kind = OutputTable::Kind::timeseries;
        } else if (value == "distribution") {
          table.kind = OutputTable::Kind::distribution;
        } else {
          throw std::runtime_error("unknown table kind '" + value + "'");
        }
        have_kind = true;
      } else {
        table.add_meta(std::move(key), std::move(value));
      }
    } else if (!have_header) {
      table.columns = split(line, ',');
      have_header = true;
    } else {
      const auto cells = split(line, ',');
      if (cells.size() != table.columns.size()) {
        throw std::runtime_error("row width does not match header");
      }
      std::vector<double> row;
      row.reserve(cells.size());
      for (const auto& c : cells) row.push_back(parse_number(c));
      table.rows.push_back(std::move(row));
    }
  }
  if (!have_kind || !have_header) {
    throw std::runtime_error("table is missing its kind or header row");
  }
  return table;
}

std::string data_section(const OutputTable& table) {
  std::ostringstream os;
  write_data(os, table);
  return os.str();
}

}  // namespace parrondo
