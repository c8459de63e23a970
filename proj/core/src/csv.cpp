#include "uhp/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace uhp {

ParseError::ParseError(std::size_t line_no, const std::string& what)
    : std::runtime_error(line_no == 0 ? what : "line " + std::to_string(line_no) + ": " + what),
      line(line_no) {}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

void write_field_csv(const std::filesystem::path& path, std::span<const double> values,
                     std::size_t cols, std::size_t rows) {
  if (values.size() != cols * rows) throw std::invalid_argument("field size mismatch");
  std::string out;
  out.reserve(values.size() * 12);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) out += ',';
      out += format_double(values[r * cols + c]);
    }
    out += '\n';
  }
  write_text_file(path, out);
}

std::vector<double> read_field_csv(const std::filesystem::path& path, std::size_t cols,
                                   std::size_t rows) {
  std::istringstream in(read_text_file(path));
  std::vector<double> values;
  values.reserve(cols * rows);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::size_t count = 0;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      try {
        values.push_back(parse_double(rest.substr(0, comma)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      ++count;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (count != cols) {
      throw ParseError(line_no, "expected " + std::to_string(cols) + " columns, found " +
                                    std::to_string(count));
    }
  }
  if (values.size() != cols * rows) {
    throw ParseError(0, path.string() + ": expected " + std::to_string(rows) + " rows");
  }
  return values;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace uhp
