#ifndef LTM_CSV_HPP
#define LTM_CSV_HPP

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ltm/types.hpp"

namespace ltm {

// Round-trip-exact decimal form of a double (17 significant digits).
std::string format_double(double v);

// RFC-4180 field quoting (quote only when the field needs it).
std::string csv_escape(const std::string& field);

// Minimal CSV emitter: one header row, then data rows; CRLF-free output with
// a trailing newline per row.
class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path,
              const std::vector<std::string>& header);

    void row(const std::vector<std::string>& fields);

  private:
    std::ofstream out_;
    size_t columns_;
};

// Read a points file with header "u,v".  Throws std::runtime_error with a
// line-numbered message on malformed input.
std::vector<PlanePoint> read_points_csv(const std::filesystem::path& path);

}  // namespace ltm

#endif
