#include "loovar/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace loovar {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<double> read_values(std::istream& in) {
  std::vector<double> values;
  std::string raw;
  std::size_t line_no = 0;
  bool first_content_line = true;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.back() == ',') line = trim(line.substr(0, line.size() - 1));

    double v = 0.0;
    const auto res = std::from_chars(line.data(), line.data() + line.size(), v);
    const bool parsed = res.ec == std::errc{} && res.ptr == line.data() + line.size();
    if (!parsed) {
      if (first_content_line) {  // header row
        first_content_line = false;
        continue;
      }
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": cannot parse value '" + std::string(line) + "'");
    }
    first_content_line = false;
    values.push_back(v);
  }
  return values;
}

Dataset read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path.string());
  try {
    auto values = read_values(in);
    if (values.empty())
      throw std::runtime_error("no observations found");
    return Dataset(std::move(values));
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace loovar
