#pragma once

#include <stdexcept>
#include <string>

namespace clifford::cli {

/// Output could not be written; maps to exit code 3.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `contents` to a temporary file beside `path` and renames it into place,
/// so readers never observe a partial file. Throws OutputError.
void write_atomically(const std::string& path, const std::string& contents);

/// write_atomically, or standard output for an empty path or "-".
void emit(const std::string& path, const std::string& contents);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double value);

}  // namespace clifford::cli
