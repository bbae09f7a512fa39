#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace thermodiscrim {

std::string version();

// Shortest decimal text that parses back to the same double; "inf"/"-inf"/"nan"
// for non-finite values.
std::string format_roundtrip(double x);

// Self-describing table:
//   # thermodiscrim v<version> cmd=<command> params=<canonical json>
//   col1,col2,...
//   rows...
struct CsvTable {
  std::string command;
  nlohmann::json params;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const CsvTable& table);
// Throws ValidationError when the file cannot be written.
void write_csv(const std::filesystem::path& path, const CsvTable& table);

}  // namespace thermodiscrim
