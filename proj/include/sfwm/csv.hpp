#pragma once
#include <string>
#include <vector>

// Deterministic CSV output: optional '#' comment lines, one header row, then
// data rows. Numbers are written in scientific notation with 17 significant
// digits ('.' decimal), which round-trips IEEE doubles exactly, so identical
// runs produce byte-identical files.

namespace sfwm {

std::string csv_num(double x);
std::string csv_int(long long x);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void comment(const std::string& text);            // before the header only
  void add_row(const std::vector<std::string>& cells);

  std::string str() const;
  void save(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::string> comments_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace sfwm
