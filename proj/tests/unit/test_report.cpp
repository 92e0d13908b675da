#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fraclab/report.hpp"

using namespace fraclab;

TEST_CASE("ratios and slopes") {
  CHECK(safe_ratio(0.0, 0.0) == 0.0);
  CHECK(safe_ratio(1.0, 4.0) == 0.25);
  CHECK(std::isinf(safe_ratio(1.0, 0.0)));

  std::vector<ReportRow> rows;
  for (double x : {1.0, 2.0, 4.0, 8.0}) rows.push_back({x, 3.0 * std::pow(x, -0.7)});
  CHECK(loglog_slope(rows) == doctest::Approx(-0.7).epsilon(1e-12));
  rows.push_back({16.0, 0.0});  // skipped
  CHECK(loglog_slope(rows) == doctest::Approx(-0.7).epsilon(1e-12));
  CHECK(std::isnan(loglog_slope({{1.0, 1.0}})));
  CHECK(std::isnan(loglog_slope({{2.0, 1.0}, {2.0, 3.0}})));
}

TEST_CASE("monotone with jitter") {
  CHECK(monotone_decreasing({{0, 3.0}, {0, 2.0}, {0, 2.08}}, 0.05));
  CHECK_FALSE(monotone_decreasing({{0, 3.0}, {0, 2.0}, {0, 2.2}}, 0.05));
  CHECK(monotone_decreasing({}, 0.0));
}

TEST_CASE("csv layout") {
  Report rep;
  ConvergenceReport sweep;
  sweep.check_id = "limit-zero-L2";
  sweep.rows = {{0.5, 0.25, 1.0, 0.0}};
  sweep.limit_estimate = 0.25;
  sweep.fitted_slope = 1.5;
  sweep.tolerance = 0.05;
  sweep.passed = true;
  rep.add(sweep);
  CheckResult c;
  c.check_id = "dee-bound";
  c.param = 0.5;
  c.lhs = 1.0;
  c.rhs = 2.0;
  c.ratio = 0.5;
  rep.add(c);
  rep.add_failure("broken", "boom");

  std::ostringstream os;
  rep.write_csv(os);
  CHECK(os.str() ==
        "check_id,param,value,aux1,aux2,verdict\n"
        "limit-zero-L2,0.5,0.25,1,0,pass\n"
        "limit-zero-L2,limit,0.25,1.5,0.050000000000000003,pass\n"
        "dee-bound,0.5,1,2,0.5,fail\n"
        "broken,0,nan,nan,nan,fail\n"
        "SUITE,1/3\n");
  CHECK(rep.passed() == 1);
  CHECK(rep.total() == 3);
  CHECK_FALSE(rep.all_passed());

  std::ostringstream summary;
  rep.write_summary(summary);
  CHECK(summary.str().find("PASS limit-zero-L2") == 0);
  CHECK(summary.str().find("FAIL broken") != std::string::npos);
  CHECK(summary.str().find("error: boom") != std::string::npos);

  std::ostringstream dat;
  write_dat(dat, sweep);
  CHECK(dat.str() == "# limit-zero-L2\n0.5 0.25\n");
}
