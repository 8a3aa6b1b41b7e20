#pragma once

// Deterministic CSV output: fixed column order, 17 significant digits, LF
// line endings. Reruns with the same config are byte-identical.

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace adamslab {

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns)
      : out_(path, std::ios::binary), ncols_(columns.size()) {
    if (!out_) throw std::runtime_error("cannot open " + path);
    write_row_strings(columns);
  }

  void row(const std::vector<double>& values) {
    std::vector<std::string> s;
    s.reserve(values.size());
    for (double v : values) s.push_back(format_number(v));
    write_row_strings(s);
  }

  void row_mixed(const std::vector<std::string>& values) {
    write_row_strings(values);
  }

 private:
  void write_row_strings(const std::vector<std::string>& vals) {
    if (vals.size() != ncols_)
      throw std::runtime_error("csv row width mismatch");
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (i) out_ << ',';
      out_ << vals[i];
    }
    out_ << '\n';
  }

  std::ofstream out_;
  std::size_t ncols_;
};

}  // namespace adamslab
