#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace transorder {

// Shortest representation that round-trips (std::to_chars). All CSV and JSON
// output goes through this so that repeated runs are byte-identical.
std::string format_double(double v);

// One-column sample CSV with header "x".
void write_sample_csv(std::ostream& out, std::span<const double> values);
std::vector<double> read_sample_csv(std::istream& in);
std::vector<double> read_sample_csv_file(const std::string& path);
void write_sample_csv_file(const std::string& path, std::span<const double> values);

}  // namespace transorder
