#include "sfwm/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "sfwm/errors.hpp"

namespace sfwm {

std::string csv_num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

std::string csv_int(long long x) { return std::to_string(x); }

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw ValidationError("csv needs at least one column");
}

void CsvWriter::comment(const std::string& text) { comments_.push_back(text); }

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != header_.size())
    throw ValidationError("csv row has " + std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(header_.size()));
  rows_.push_back(cells);
}

std::string CsvWriter::str() const {
  std::string out;
  for (const std::string& c : comments_) {
    out += "# ";
    out += c;
    out += '\n';
  }
  for (size_t k = 0; k < header_.size(); ++k) {
    if (k) out += ',';
    out += header_[k];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += row[k];
    }
    out += '\n';
  }
  return out;
}

void CsvWriter::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write csv file '" + path + "'");
  out << str();
  if (!out) throw ValidationError("failed writing csv file '" + path + "'");
}

}  // namespace sfwm
