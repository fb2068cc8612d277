#include "ltm/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ltm {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     const std::vector<std::string>& header)
    : out_(path), columns_(header.size()) {
    if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    if (fields.size() != columns_)
        throw std::runtime_error("csv row has " + std::to_string(fields.size()) +
                                 " fields, expected " + std::to_string(columns_));
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << csv_escape(fields[i]);
    }
    out_ << '\n';
}

std::vector<PlanePoint> read_points_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open points file " + path.string());
    std::string line;
    long lineno = 0;
    std::vector<PlanePoint> points;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != "u,v")
                throw std::runtime_error(path.string() + ":1: expected header 'u,v', got '" +
                                         line + "'");
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": expected two comma-separated fields");
        try {
            size_t used_u = 0, used_v = 0;
            const std::string su = line.substr(0, comma);
            const std::string sv = line.substr(comma + 1);
            const double u = std::stod(su, &used_u);
            const double v = std::stod(sv, &used_v);
            if (used_u != su.size() || used_v != sv.size()) throw std::invalid_argument("");
            points.emplace_back(u, v);
        } catch (const std::exception&) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": cannot parse '" + line + "' as u,v");
        }
    }
    return points;
}

}  // namespace ltm
