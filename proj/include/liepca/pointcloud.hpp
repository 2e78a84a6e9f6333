#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liepca/matrix.hpp"

namespace liepca {

/// Parse/format error carrying a 1-based line number in the message.
class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PointCloud {
  int ambient_dim = 0;
  std::vector<Vec> points;

  int size() const { return static_cast<int>(points.size()); }
};

namespace detail {

inline double parse_double(const std::string& field, int line_no) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  while (last != first && (*(last - 1) == ' ' || *(last - 1) == '\t')) --last;
  double value = 0.0;
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    throw CsvError("line " + std::to_string(line_no) + ": bad number '" +
                   field + "'");
  return value;
}

inline void format_double(std::ostream& os, double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  os.write(buf, res.ptr - buf);
}

}  // namespace detail

/// Headerless CSV, one point per row, '.' decimal separator.
inline PointCloud read_csv(std::istream& in) {
  PointCloud cloud;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char c : line)
      if (c != ' ' && c != '\t') blank = false;
    if (blank) continue;

    Vec point;
    std::string field;
    std::stringstream row(line);
    while (std::getline(row, field, ','))
      point.push_back(detail::parse_double(field, line_no));
    if (!all_finite(point))
      throw CsvError("line " + std::to_string(line_no) + ": non-finite value");

    if (cloud.points.empty()) {
      cloud.ambient_dim = static_cast<int>(point.size());
    } else if (static_cast<int>(point.size()) != cloud.ambient_dim) {
      throw CsvError("line " + std::to_string(line_no) + ": expected " +
                     std::to_string(cloud.ambient_dim) + " columns, got " +
                     std::to_string(point.size()));
    }
    cloud.points.push_back(std::move(point));
  }
  if (cloud.points.empty()) throw CsvError("line 1: no data rows");
  return cloud;
}

inline PointCloud read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open '" + path + "'");
  return read_csv(in);
}

inline void write_csv(std::ostream& os, const PointCloud& cloud) {
  for (const Vec& p : cloud.points) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j > 0) os << ',';
      detail::format_double(os, p[j]);
    }
    os << '\n';
  }
}

inline void write_csv_file(const std::string& path, const PointCloud& cloud) {
  std::ofstream os(path);
  if (!os) throw CsvError("cannot open '" + path + "' for writing");
  write_csv(os, cloud);
}

}  // namespace liepca
