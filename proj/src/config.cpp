#include "fraclab/config.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace fraclab {

std::map<std::string, double> RunConfig::default_tolerances() {
  return {
      {"jitter", 0.05},
      {"limit-zero", 0.05},
      {"limit-one", 0.02},
      {"energy-limit", 0.05},
      {"energy-limit-rough", 0.07},
      {"energy-limit-truncated", 0.05},
      {"laplacian-identity", 0.03},
      {"alpha-continuity", 0.01},
      {"lower-semicontinuity", 0.02},
      {"interpolation", 10.0},
      {"gagliardo-slope", 0.15},
      {"gagliardo-blowup", 0.05},
      {"tail-slope", 0.05},
      {"besov-stability", 0.10},
      {"besov-growth", 0.20},
      {"constants-exact", 1e-12},
      {"constants-near-one", 1e-2},
      {"backend-agreement", 1e-2},
      {"backend-gain", 1.5},
      {"riesz-sign", 1e-3},
      {"riesz-field", 1e-2},
      {"duality", 1e-3},
      {"semigroup-spectral", 1e-8},
      {"semigroup-quadrature", 3e-2},
      {"representation", 1e-8},
      {"laplacian-agreement", 2e-2},
      {"self-adjoint", 1e-6},
      {"mihlin-spread", 2.0},
      {"mihlin-stability", 0.05},
  };
}

double RunConfig::tol(const std::string& key) const {
  auto it = tolerances.find(key);
  if (it == tolerances.end()) throw ConfigError("no tolerance named '" + key + "'");
  return it->second;
}

bool RunConfig::has_dimension(int n) const {
  return std::find(dimensions.begin(), dimensions.end(), n) != dimensions.end();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double to_real(const std::string& v, const std::string& key) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw ConfigError("'" + key + "' expects a number, got '" + v + "'");
  return x;
}

int to_int(const std::string& v, const std::string& key) {
  const double x = to_real(v, key);
  if (x != static_cast<int>(x)) throw ConfigError("'" + key + "' expects an integer, got '" + v + "'");
  return static_cast<int>(x);
}

std::vector<double> to_list(const std::string& v, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_real(trim(item), key));
  if (out.empty()) throw ConfigError("'" + key + "' must not be empty");
  return out;
}

void check_grid(const GridSettings& g, const std::string& name) {
  if (g.n != 1 && g.n != 2) throw ConfigError(name + ": dimension must be 1 or 2");
  if (!(g.half_width > 0.0)) throw ConfigError(name + ": half width must be positive");
  if (g.points < 4 || g.points % 2 != 0) throw ConfigError(name + ": points must be even and >= 4");
}

void check_orders(const std::vector<double>& v, const std::string& name, bool closed) {
  for (double a : v) {
    const bool ok = closed ? (a >= 0.0 && a <= 1.0) : (a > 0.0 && a < 1.0);
    if (!ok) throw ConfigError(name + ": orders must lie in " + (closed ? "[0,1]" : "(0,1)"));
  }
}

}  // namespace

void RunConfig::validate() const {
  if (dimensions.empty()) throw ConfigError("at least one dimension is required");
  for (int n : dimensions)
    if (n != 1 && n != 2) throw ConfigError("dimensions must be 1 or 2");
  if (pad != 2 && pad != 4 && pad != 8) throw ConfigError("pad must be 2, 4 or 8");
  if (agreement2_pad != 2 && agreement2_pad != 4 && agreement2_pad != 8)
    throw ConfigError("agreement pad must be 2, 4 or 8");
  check_grid(grid1, "grid1");
  check_grid(grid2, "grid2");
  check_grid(agreement1, "agreement1");
  check_grid(agreement2, "agreement2");
  check_grid(gagliardo, "gagliardo");
  check_grid(tail, "tail");
  check_grid(besov, "besov");
  check_orders(limit_alphas, "limit alphas", false);
  check_orders(limit_one_alphas, "limit_one alphas", false);
  check_orders(laplacian_alphas, "laplacian alphas", false);
  check_orders(interpolation_betas, "interpolation betas", false);
  check_orders(interpolation_gammas, "interpolation gammas", true);
  check_orders(hardy_betas, "hardy betas", false);
  check_orders(backend_alphas, "backend alphas", false);
  check_orders(tail_betas, "tail betas", false);
  check_orders(besov_alphas, "besov alphas", false);
  check_orders({interpolation_alpha}, "interpolation alpha", false);
  check_orders({blowup_beta}, "blowup beta", false);
  for (double d : continuity_deltas)
    if (!(std::abs(d) < 0.5)) throw ConfigError("continuity deltas must be below 0.5 in size");
  for (double r : tail_radii)
    if (!(r > 0.0)) throw ConfigError("tail radii must be positive");
  for (double r : splitting_radii)
    if (!(r > 0.0)) throw ConfigError("splitting radii must be positive");
  for (const auto& [k, v] : tolerances)
    if (!(v > 0.0)) throw ConfigError("tolerance '" + k + "' must be positive");
}

RunConfig parse_config(std::istream& in) {
  RunConfig c;
  using Setter = std::function<void(const std::string&, const std::string&)>;
  auto grid_setter = [](GridSettings& g) -> Setter {
    return [&g](const std::string& k, const std::string& v) {
      if (k == "n") g.n = to_int(v, k);
      else if (k == "L") g.half_width = to_real(v, k);
      else if (k == "N") g.points = to_int(v, k);
      else throw ConfigError("unknown grid key '" + k + "'");
    };
  };
  std::map<std::string, Setter> sections;
  sections["run"] = [&c](const std::string& k, const std::string& v) {
    if (k == "dimensions") {
      c.dimensions.clear();
      for (double d : to_list(v, k)) c.dimensions.push_back(static_cast<int>(d));
    } else if (k == "backend") {
      try {
        c.backend = parse_backend(v);
      } catch (const DomainError& e) {
        throw ConfigError(e.what());
      }
    } else if (k == "pad") {
      c.pad = to_int(v, k);
    } else if (k == "agreement2_pad") {
      c.agreement2_pad = to_int(v, k);
    } else if (k == "output") {
      c.output_dir = v;
    } else {
      throw ConfigError("unknown run key '" + k + "'");
    }
  };
  sections["grid1"] = grid_setter(c.grid1);
  sections["grid2"] = grid_setter(c.grid2);
  sections["agreement1"] = grid_setter(c.agreement1);
  sections["agreement2"] = grid_setter(c.agreement2);
  sections["gagliardo"] = grid_setter(c.gagliardo);
  sections["tail"] = grid_setter(c.tail);
  sections["besov"] = grid_setter(c.besov);
  sections["orders"] = [&c](const std::string& k, const std::string& v) {
    const std::map<std::string, std::vector<double>*> lists{
        {"limit", &c.limit_alphas},
        {"limit_one", &c.limit_one_alphas},
        {"laplacian", &c.laplacian_alphas},
        {"continuity_deltas", &c.continuity_deltas},
        {"interpolation_betas", &c.interpolation_betas},
        {"interpolation_gammas", &c.interpolation_gammas},
        {"hardy_betas", &c.hardy_betas},
        {"backend", &c.backend_alphas},
        {"tail_betas", &c.tail_betas},
        {"tail_radii", &c.tail_radii},
        {"besov", &c.besov_alphas},
        {"splitting_radii", &c.splitting_radii},
    };
    if (auto it = lists.find(k); it != lists.end()) *it->second = to_list(v, k);
    else if (k == "interpolation_alpha") c.interpolation_alpha = to_real(v, k);
    else if (k == "blowup_beta") c.blowup_beta = to_real(v, k);
    else throw ConfigError("unknown orders key '" + k + "'");
  };
  sections["tolerances"] = [&c](const std::string& k, const std::string& v) {
    if (!c.tolerances.count(k)) throw ConfigError("unknown tolerance '" + k + "'");
    c.tolerances[k] = to_real(v, k);
  };

  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!sections.count(section)) throw ConfigError("unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    if (section.empty()) throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
    sections[section](trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in);
}

}  // namespace fraclab
