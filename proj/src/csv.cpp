#include "taxlab/csv.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

namespace taxlab {

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    CsvTable t;
    size_t pos = 0;
    bool first = true;
    while (pos < content.size()) {
        size_t nl = content.find('\n', pos);
        if (nl == std::string::npos) break; // unterminated tail: ignore
        std::string line = content.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (first) {
            t.header = std::move(fields);
            first = false;
        } else {
            t.rows.push_back(std::move(fields));
        }
    }
    return t;
}

double parse_double(const std::string& s, const std::string& where) {
    if (s.empty()) throw std::runtime_error(where + ": empty numeric field");
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw std::runtime_error(where + ": bad number '" + s + "'");
    if (std::isnan(v)) throw std::runtime_error(where + ": NaN not allowed");
    return v;
}

long parse_long(const std::string& s, const std::string& where) {
    if (s.empty()) throw std::runtime_error(where + ": empty integer field");
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size())
        throw std::runtime_error(where + ": bad integer '" + s + "'");
    return v;
}

} // namespace taxlab
