#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraclab/backend.hpp"

namespace fraclab {

/// Unreadable or inconsistent run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSettings {
  int n = 1;
  double half_width = 12.0;
  int points = 1024;

  Grid grid() const { return Grid(n, half_width, points); }
};

/// Everything a verification run depends on. Parsed from plain text:
///
///   # comment
///   [section]
///   key = value
///
/// Lists are comma separated. Unknown sections or keys are errors, so a
/// typo cannot silently fall back to a default.
struct RunConfig {
  std::vector<int> dimensions{1, 2};
  Backend backend = Backend::spectral;
  int pad = 8;
  std::string output_dir = "reports";

  GridSettings grid1{1, 12.0, 1024};
  GridSettings grid2{2, 8.0, 128};
  GridSettings agreement1{1, 12.0, 256};
  GridSettings agreement2{2, 6.0, 128};
  int agreement2_pad = 4;
  GridSettings gagliardo{1, 4.0, 800};
  GridSettings tail{1, 96.0, 4096};
  GridSettings besov{2, 2.0, 128};

  std::vector<double> limit_alphas{0.4, 0.2, 0.1, 0.05, 0.02};
  std::vector<double> limit_one_alphas{0.9, 0.95, 0.99};
  std::vector<double> laplacian_alphas{0.4, 0.2, 0.1, 0.05, 0.01};
  std::vector<double> continuity_deltas{0.2, 0.1, 0.05, 0.01};
  std::vector<double> interpolation_betas{0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.75};
  std::vector<double> interpolation_gammas{0.0, 0.2};
  double interpolation_alpha = 0.8;
  std::vector<double> hardy_betas{0.02, 0.05, 0.1, 0.2, 0.4};
  std::vector<double> backend_alphas{0.25, 0.5, 0.75};
  std::vector<double> tail_betas{0.3, 0.6};
  std::vector<double> tail_radii{1.0, 2.0, 4.0, 8.0};
  std::vector<double> besov_alphas{0.25, 0.5};
  std::vector<double> splitting_radii{0.5, 1.0, 2.0};
  double blowup_beta = 0.02;

  /// Frozen pass/fail thresholds keyed by check name.
  std::map<std::string, double> tolerances = default_tolerances();

  double tol(const std::string& key) const;

  static std::map<std::string, double> default_tolerances();
  bool has_dimension(int n) const;
  void validate() const;
};

RunConfig parse_config(std::istream& in);
/// Throws ConfigError when the file is missing or malformed.
RunConfig load_config(const std::string& path);

}  // namespace fraclab
