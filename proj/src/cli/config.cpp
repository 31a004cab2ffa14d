#include "halfwell/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "halfwell/error.hpp"

namespace halfwell::cli {

namespace {

double parse_number(std::string_view text, std::string_view what) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw UsageError(std::string(what) + ": not a number: '" + std::string(text) + "'");
  return value;
}

template <typename T>
T get_as(const nlohmann::json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError(std::string("config: bad value for '") + key + "'");
  }
}

}  // namespace

PotentialSpec RunConfig::spec() const {
  PotentialSpec s;
  try {
    s.kind = parse_model_name(model);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  s.v0 = v0;
  s.a = a;
  s.lambda = lambda;
  try {
    validate(s);
  } catch (const InvalidSpec& e) {
    throw UsageError(e.what());
  }
  if (state < 0) throw UsageError("state must be non-negative");
  if (!(p_max > 0.0)) throw UsageError("pmax must be positive");
  if (dp < 0.0) throw UsageError("dp must be positive");
  if (dx < 0.0) throw UsageError("dx must be positive");
  return s;
}

TransformOptions RunConfig::transform_options() const {
  TransformOptions t;
  t.p_max = p_max;
  t.dp = dp;
  return t;
}

std::pair<double, double> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("window must be lo:hi, got '" + text + "'");
  const double lo = parse_number(std::string_view(text).substr(0, colon), "window");
  const double hi = parse_number(std::string_view(text).substr(colon + 1), "window");
  if (!(hi > lo)) throw UsageError("window must satisfy lo < hi");
  return {lo, hi};
}

std::vector<double> parse_cutoffs(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, "cutoffs"));
  if (out.empty()) throw UsageError("cutoffs: empty list");
  return out;
}

void apply_json(RunConfig& cfg, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("config: top level must be an object");

  static const std::vector<std::string> known{"model", "v0",   "a",       "lambda", "state", "pmax",
                                              "dp",    "dx",   "cutoffs", "window", "out",   "json"};
  for (const auto& item : j.items())
    if (std::find(known.begin(), known.end(), item.key()) == known.end())
      throw UsageError("config: unknown key '" + item.key() + "'");

  if (j.contains("model")) cfg.model = get_as<std::string>(j, "model");
  if (j.contains("v0")) cfg.v0 = get_as<double>(j, "v0");
  if (j.contains("a")) cfg.a = get_as<double>(j, "a");
  if (j.contains("lambda")) cfg.lambda = get_as<double>(j, "lambda");
  if (j.contains("state")) cfg.state = get_as<int>(j, "state");
  if (j.contains("pmax")) cfg.p_max = get_as<double>(j, "pmax");
  if (j.contains("dp")) cfg.dp = get_as<double>(j, "dp");
  if (j.contains("dx")) cfg.dx = get_as<double>(j, "dx");
  if (j.contains("cutoffs")) cfg.cutoffs = get_as<std::vector<double>>(j, "cutoffs");
  if (j.contains("window")) {
    const auto& w = j.at("window");
    if (w.is_string()) {
      std::tie(cfg.window_lo, cfg.window_hi) = parse_window(w.get<std::string>());
    } else {
      const auto pair = get_as<std::vector<double>>(j, "window");
      if (pair.size() != 2 || !(pair[1] > pair[0])) throw UsageError("config: window must be [lo, hi]");
      cfg.window_lo = pair[0];
      cfg.window_hi = pair[1];
    }
  }
  if (j.contains("out")) cfg.out = get_as<std::string>(j, "out");
  if (j.contains("json")) cfg.json_path = get_as<std::string>(j, "json");
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  apply_json(cfg, buffer.str());
}

}  // namespace halfwell::cli
