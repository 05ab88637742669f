#include "reticular/numeric_config.hpp"

#include <fstream>
#include <sstream>

#include "reticular/poly.hpp"

namespace reticular {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw DomainError("config: '" + key + "' expects a number, got '" + v + "'");
  return d;
}

int to_int(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  if (d != static_cast<double>(static_cast<int>(d))) throw DomainError("config: '" + key + "' expects an integer");
  return static_cast<int>(d);
}

}  // namespace

std::pair<double, double> parse_interval(const std::string& s) {
  const auto colon = s.find(':', 1);
  if (colon == std::string::npos) {
    const double w = to_double("interval", trim(s));
    if (w <= 0) throw DomainError("interval half-width must be positive");
    return {-w, w};
  }
  const double a = to_double("interval", trim(s.substr(0, colon)));
  const double b = to_double("interval", trim(s.substr(colon + 1)));
  if (!(a < b)) throw DomainError("interval '" + s + "' is empty");
  return {a, b};
}

void NumericConfig::apply(const std::string& key, const std::string& value) {
  if (key == "tol_eq") tol_eq = to_double(key, value);
  else if (key == "tol_deg") tol_deg = to_double(key, value);
  else if (key == "seed_box") std::tie(seed_lo, seed_hi) = parse_interval(value);
  else if (key == "seeds_per_axis") seeds_per_axis = to_int(key, value);
  else if (key == "newton_max_iter") newton_max_iter = to_int(key, value);
  else if (key == "damping") damping = to_double(key, value);
  else if (key == "densify_spacing") densify_spacing = to_double(key, value);
  else if (key == "dedupe_tol") dedupe_tol = to_double(key, value);
  else if (key == "threads") threads = to_int(key, value);
  else if (key == "simd") simd = kernels::parse_backend(value);
  else throw DomainError("config: unknown key '" + key + "'");
  if (tol_eq <= 0 || tol_deg <= 0) throw DomainError("config: tolerances must be positive");
  if (seeds_per_axis < 1) throw DomainError("config: seeds_per_axis must be at least 1");
  if (newton_max_iter < 1) throw DomainError("config: newton_max_iter must be at least 1");
  if (!(damping > 0 && damping < 1)) throw DomainError("config: damping must lie in (0, 1)");
  if (densify_spacing <= 0) throw DomainError("config: densify_spacing must be positive");
  if (threads < 0) throw DomainError("config: threads must be nonnegative");
}

NumericConfig NumericConfig::from_string(const std::string& text) {
  NumericConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    cfg.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

NumericConfig NumericConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str());
}

}  // namespace reticular
