#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fraclab/config.hpp"
#include "fraclab/suites.hpp"

using namespace fraclab;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace

TEST_CASE("defaults") {
  const RunConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.has_dimension(1));
  CHECK(c.has_dimension(2));
  CHECK(c.tol("riesz-sign") == 1e-3);
  CHECK(c.tol("tail-slope") == 0.05);
  CHECK_THROWS_AS(c.tol("nonsense"), ConfigError);
}

TEST_CASE("shipped config equals the defaults") {
  const RunConfig file = load_config(FRACLAB_SOURCE_DIR "/configs/default.cfg");
  const RunConfig def;
  CHECK(file.dimensions == def.dimensions);
  CHECK(file.pad == def.pad);
  CHECK(file.grid2.points == def.grid2.points);
  CHECK(file.limit_alphas == def.limit_alphas);
  CHECK(file.interpolation_betas == def.interpolation_betas);
  CHECK(file.tolerances == def.tolerances);
}

TEST_CASE("parsing") {
  const RunConfig c = parse(
      "# comment\n"
      "[run]\n"
      "dimensions = 1   # trailing\n"
      "backend = quadrature\n"
      "[grid1]\n"
      "N = 512\n"
      "[orders]\n"
      "limit = 0.3, 0.1\n"
      "[tolerances]\n"
      "limit-zero = 0.08\n");
  CHECK(c.dimensions == std::vector<int>{1});
  CHECK(c.backend == Backend::quadrature);
  CHECK(c.grid1.points == 512);
  CHECK(c.grid1.half_width == 12.0);
  CHECK(c.limit_alphas == std::vector<double>{0.3, 0.1});
  CHECK(c.tol("limit-zero") == 0.08);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(parse("[run]\ncolour = red\n"), ConfigError);
  CHECK_THROWS_AS(parse("[extras]\n"), ConfigError);
  CHECK_THROWS_AS(parse("pad = 4\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\npad\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\npad = 3\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\npad = four\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\ndimensions = 3\n"), ConfigError);
  CHECK_THROWS_AS(parse("[grid1]\nN = 513\n"), ConfigError);
  CHECK_THROWS_AS(parse("[grid1]\nN = 12.5\n"), ConfigError);
  CHECK_THROWS_AS(parse("[orders]\nlimit = 0.3,1.2\n"), ConfigError);
  CHECK_THROWS_AS(parse("[orders]\nlimit =\n"), ConfigError);
  CHECK_THROWS_AS(parse("[tolerances]\nduality = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse("[tolerances]\nunknown = 1\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/fraclab.cfg"), ConfigError);
}

TEST_CASE("suite names") {
  CHECK(parse_suite("limits") == Suite::limits);
  CHECK(to_string(Suite::counterexample) == "counterexample");
  CHECK_THROWS_AS(parse_suite("everything"), ConfigError);
}

TEST_CASE("counterexample suite needs the plane") {
  RunConfig line_only;
  line_only.dimensions = {1};
  CHECK_THROWS_AS(run_suite(Suite::counterexample, line_only), ConfigError);
  CHECK_THROWS_AS(run_suite(Suite::all, RunConfig{}), ConfigError);

  const std::string path = "test_config_line_only.cfg";
  std::ofstream(path) << "[run]\ndimensions = 1\n";
  std::ostringstream log;
  CHECK(cmd_verify("counterexample", path, std::string("unused_reports"), log) == exit_usage);
  CHECK(cmd_verify("all", path, std::string("unused_reports"), log) == exit_usage);
  CHECK(cmd_verify("limits", std::string("/nonexistent.cfg"), std::nullopt, log) == exit_usage);
  CHECK(cmd_verify("bogus", std::nullopt, std::nullopt, log) == exit_usage);
  std::remove(path.c_str());
}
