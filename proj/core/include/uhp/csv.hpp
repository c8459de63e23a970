#ifndef UHP_CSV_HPP_
#define UHP_CSV_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace uhp {

/// I/O failure (missing file, unwritable directory). Maps to CLI exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input; `line` is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line;
};

/// Shortest decimal that round-trips to the same double; "inf", "-inf", "nan".
std::string format_double(double x);

/// Parses a double, accepting inf / -inf / nan. Throws std::invalid_argument.
double parse_double(std::string_view text);

/// Row-major field: `rows` lines of `cols` comma-separated values.
void write_field_csv(const std::filesystem::path& path, std::span<const double> values,
                     std::size_t cols, std::size_t rows);

/// Reads a row-major CSV field and checks its dimensions.
std::vector<double> read_field_csv(const std::filesystem::path& path, std::size_t cols,
                                   std::size_t rows);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace uhp

#endif  // UHP_CSV_HPP_
