#include "loovar/sim_config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace loovar {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("config line " + std::to_string(line_no) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s, std::size_t line_no) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    fail(line_no, "expected a number, got '" + std::string(s) + "'");
  return v;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    fail(line_no, "expected a nonnegative integer, got '" + std::string(s) + "'");
  return v;
}

// key=value tokens of a dgp line, order-insensitive.
std::map<std::string, std::string> parse_pairs(std::string_view rest,
                                               std::size_t line_no) {
  std::map<std::string, std::string> pairs;
  std::istringstream tokens{std::string(rest)};
  std::string token;
  while (tokens >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= token.size())
      fail(line_no, "expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    if (!pairs.emplace(key, token.substr(eq + 1)).second)
      fail(line_no, "duplicate key '" + key + "'");
  }
  return pairs;
}

DgpEntry parse_dgp_line(std::string_view rest, std::size_t line_no,
                        std::size_t dgp_index) {
  rest = trim(rest);
  const auto space = rest.find_first_of(" \t");
  const std::string kind{space == std::string_view::npos ? rest
                                                         : rest.substr(0, space)};
  auto pairs = parse_pairs(space == std::string_view::npos ? std::string_view{}
                                                           : rest.substr(space),
                           line_no);

  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = pairs.find(key);
    if (it == pairs.end()) return std::nullopt;
    std::string value = it->second;
    pairs.erase(it);
    return value;
  };
  auto require = [&](const char* key) {
    auto v = take(key);
    if (!v) fail(line_no, std::string("dgp ") + kind + " requires " + key + "=");
    return *v;
  };

  DgpEntry entry{"dgp" + std::to_string(dgp_index + 1),
                 DgpSpec::normal(0.0, 1.0), std::nullopt};
  if (auto label = take("label")) entry.label = *label;
  if (auto seed = take("seed")) entry.seed = parse_uint(*seed, line_no);

  if (kind == "normal") {
    const double mean = parse_double(require("mean"), line_no);
    const auto sd = take("sd");
    const auto variance = take("variance");
    if (sd.has_value() == variance.has_value())
      fail(line_no, "dgp normal takes exactly one of sd= / variance=");
    entry.spec = sd ? DgpSpec::normal(mean, parse_double(*sd, line_no))
                    : DgpSpec::normal_with_variance(
                          mean, parse_double(*variance, line_no));
  } else if (kind == "skew_normal") {
    entry.spec = DgpSpec::skew_normal(parse_double(require("location"), line_no),
                                      parse_double(require("scale"), line_no),
                                      parse_double(require("shape"), line_no));
  } else {
    fail(line_no, "unknown dgp kind '" + kind + "' (normal | skew_normal)");
  }

  if (!pairs.empty())
    fail(line_no, "unknown dgp key '" + pairs.begin()->first + "'");
  return entry;
}

}  // namespace

SimulationConfig parse_simulation_config(std::istream& in) {
  SimulationConfig cfg;
  cfg.dgps.clear();

  bool saw_n = false, saw_reps = false, saw_draws = false;
  bool saw_sm = false, saw_s0 = false;
  double sigma_m_sq = 0.0, sigma_0_sq = 0.0;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = trim(line.substr(0, hash));
    if (line.empty()) continue;

    if (line.starts_with("dgp ") || line == "dgp") {
      cfg.dgps.push_back(parse_dgp_line(line.substr(3), line_no, cfg.dgps.size()));
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      fail(line_no, "expected 'key = value' or 'dgp ...'");
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) fail(line_no, "empty key or value");

    if (key == "n") {
      cfg.n = parse_uint(value, line_no);
      saw_n = true;
    } else if (key == "replications") {
      cfg.replications = parse_uint(value, line_no);
      saw_reps = true;
    } else if (key == "bb_draws") {
      cfg.bb_draws = parse_uint(value, line_no);
      saw_draws = true;
    } else if (key == "bb_alpha") {
      cfg.bb_alpha = parse_double(value, line_no);
    } else if (key == "sigma_m_sq") {
      sigma_m_sq = parse_double(value, line_no);
      saw_sm = true;
    } else if (key == "sigma_0_sq") {
      sigma_0_sq = parse_double(value, line_no);
      saw_s0 = true;
    } else if (key == "seed") {
      cfg.seed = parse_uint(value, line_no);
    } else if (key == "workers") {
      cfg.workers = parse_uint(value, line_no);
    } else if (key == "out") {
      cfg.output_dir = std::string(value);
    } else if (key == "format") {
      if (value == "csv")
        cfg.format = OutputFormat::csv;
      else if (value == "json")
        cfg.format = OutputFormat::json;
      else
        fail(line_no, "format must be csv or json");
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }

  if (!saw_n) throw std::runtime_error("config: missing n");
  if (!saw_reps) throw std::runtime_error("config: missing replications");
  if (!saw_draws) throw std::runtime_error("config: missing bb_draws");
  if (!saw_sm) throw std::runtime_error("config: missing sigma_m_sq");
  if (!saw_s0) throw std::runtime_error("config: missing sigma_0_sq");
  cfg.model = ModelConfig(sigma_m_sq, sigma_0_sq);
  return cfg;
}

SimulationConfig load_simulation_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path.string());
  try {
    return parse_simulation_config(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace loovar
