#pragma once

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taxlab {

// Shortest representation that still round-trips an IEEE double exactly.
inline std::string format_double(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const {
        for (size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        return -1;
    }

    int require_column(const std::string& name) const {
        int c = column(name);
        if (c < 0) throw std::runtime_error("missing column '" + name + "'");
        return c;
    }
};

// Reads a whole CSV file with a header row. A trailing partial line (no
// newline, e.g. from an interrupted writer) is dropped.
CsvTable read_csv(const std::string& path);

double parse_double(const std::string& s, const std::string& where);
long parse_long(const std::string& s, const std::string& where);

} // namespace taxlab
