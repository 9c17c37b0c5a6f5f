#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qlb {

// Shortest text that round-trips a double exactly; '.' decimal, C locale.
std::string fmt17(double x);

// RFC-4180 style quoting for cells that contain separators or quotes.
std::string csv_quote(const std::string& s);

// CSV with '#' provenance comments. Values are written verbatim, so callers
// format numbers with fmt17 to keep outputs bit-identical across runs.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void comment(const std::string& line);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& os_;
};

} // namespace qlb
