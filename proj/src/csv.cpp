#include "thermodiscrim/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "thermodiscrim/hermitian.hpp"

#ifndef THERMODISCRIM_VERSION
#define THERMODISCRIM_VERSION "0.0.0"
#endif

namespace thermodiscrim {

std::string version() { return THERMODISCRIM_VERSION; }

std::string format_roundtrip(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const CsvTable& table) {
  os << "# thermodiscrim v" << version() << " cmd=" << table.command << " params=" << table.params.dump() << '\n';
  for (size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
  os << '\n';
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_roundtrip(row[c]);
    os << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  write_csv(out, table);
  out.flush();
  if (!out) throw ValidationError("error while writing " + path.string());
}

}  // namespace thermodiscrim
