#include "transorder/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace transorder {

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), res.ptr};
}

void write_sample_csv(std::ostream& out, std::span<const double> values) {
    out << "x\n";
    for (double v : values) {
        out << format_double(v) << '\n';
    }
}

std::vector<double> read_sample_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("sample csv: empty input");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x") {
        throw std::invalid_argument("sample csv: expected header \"x\", got \"" + line + "\"");
    }
    std::vector<double> values;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        double v = 0.0;
        const auto res = std::from_chars(line.data(), line.data() + line.size(), v);
        if (res.ec != std::errc{} || res.ptr != line.data() + line.size()) {
            throw std::invalid_argument("sample csv: bad value at line " + std::to_string(lineno) +
                                        ": \"" + line + "\"");
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw std::invalid_argument("sample csv: no values");
    }
    return values;
}

std::vector<double> read_sample_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("sample csv: cannot open " + path);
    }
    return read_sample_csv(in);
}

void write_sample_csv_file(const std::string& path, std::span<const double> values) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("sample csv: cannot write " + path);
    }
    write_sample_csv(out, values);
}

}  // namespace transorder
