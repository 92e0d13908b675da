#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fraclab/field_io.hpp"
#include "fraclab/fields.hpp"

using namespace fraclab;

TEST_CASE("grid geometry") {
  const Grid g(1, 2.0, 8);
  CHECK(g.spacing() == 0.5);
  CHECK(g.coordinate(0) == -1.75);
  CHECK(g.coordinate(7) == 1.75);
  CHECK(g.refined().points() == 16);
  CHECK(g.enlarged().spacing() == g.spacing());
  CHECK(g.enlarged().half_width() == 4.0);

  const Grid g2(2, 1.0, 4);
  CHECK(g2.size() == 16);
  CHECK(g2.cell_measure() == 0.25);
  const auto p = g2.position(g2.flat(1, 3));
  CHECK(p[0] == -0.25);
  CHECK(p[1] == 0.75);
  CHECK(g2.multi_index(g2.flat(2, 1)) == std::array<int, 2>{2, 1});

  CHECK_THROWS_AS(Grid(3, 1.0, 4), DomainError);
  CHECK_THROWS_AS(Grid(1, 1.0, 5), DomainError);
  CHECK_THROWS_AS(Grid(1, -1.0, 4), DomainError);
}

TEST_CASE("gaussian samples and mass") {
  const Grid g(1, 8.0, 256);
  const ScalarField f = sample(TestFunctionSpec::gaussian(), g);
  for (int k : {0, 100, 128, 200}) {
    const double x = g.coordinate(k);
    CHECK(f.at(k) == doctest::Approx(std::exp(-x * x)).epsilon(1e-15));
  }
  CHECK(integral(f) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
  CHECK(center_value(f) == doctest::Approx(std::exp(-std::pow(g.spacing() / 2, 2))));

  const Grid g2(2, 6.0, 96);
  CHECK(integral(sample(TestFunctionSpec::unit_mass_gaussian(2, 0.7), g2)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(integral(sample(TestFunctionSpec::gaussian_dilated(0.5), g2)) == doctest::Approx(M_PI).epsilon(1e-10));
}

TEST_CASE("gaussian derivatives") {
  const Grid g(1, 10.0, 512);
  const ScalarField d2 = sample(TestFunctionSpec::gaussian_derivative(1.0, 1.0, 2), g);
  for (int k : {3, 250, 300}) {
    const double x = g.coordinate(k);
    CHECK(d2.at(k) == doctest::Approx((4 * x * x - 2) * std::exp(-x * x)).epsilon(1e-12));
  }
  // Moments below the order vanish.
  const ScalarField d8 = sample(TestFunctionSpec::gaussian_derivative(1.0, 1.0, 8), g);
  const double scale = d8.values().abs().maxCoeff();
  for (int m = 0; m < 8; ++m) {
    ScalarField xm = d8;
    for (int k = 0; k < g.points(); ++k) xm[k] *= std::pow(g.coordinate(k), m);
    CAPTURE(m);
    CHECK(std::abs(integral(xm)) < 1e-9 * scale);
  }
  const ScalarField odd = sample(TestFunctionSpec::parse("odd-gaussian"), g);
  const double x = g.coordinate(300);
  CHECK(odd.at(300) == doctest::Approx(x * std::exp(-x * x)));
  CHECK_THROWS_AS(TestFunctionSpec::gaussian_derivative(1.0, 1.0, 0), DomainError);
}

TEST_CASE("annulus field has no mass") {
  const Grid g(1, 24.0, 512);
  const ScalarField f = sample(TestFunctionSpec::annulus(), g);
  CHECK(std::abs(integral(f)) < 1e-8 * f.values().abs().sum() * g.spacing());
}

TEST_CASE("eta profile") {
  CHECK(eta_profile(0.0) == 1.0);
  CHECK(eta_profile(0.5) == 1.0);
  CHECK(eta_profile(-0.75) == 0.5);
  CHECK(eta_profile(1.0) == 0.0);
  CHECK(eta_profile(3.0) == 0.0);
  double lip = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const double t = k / 1000.0, dt = 1e-6;
    lip = std::max(lip, std::abs(eta_profile(t + dt) - eta_profile(t)) / dt);
  }
  CHECK(lip == doctest::Approx(3.0).epsilon(1e-4));
}

TEST_CASE("indicator and cutoff") {
  const Grid g(1, 2.0, 400);
  const ScalarField f = sample(TestFunctionSpec::indicator(0.0, 1.0), g);
  CHECK(integral(f) == doctest::Approx(1.0).epsilon(1e-12));
  const ScalarField s = sample(TestFunctionSpec::parse("indicator:a=0,b=1,w=0.2"), g);
  CHECK(integral(s) == doctest::Approx(1.0).epsilon(1e-6));
  const ScalarField c = cutoff_eta(1.0, g);
  CHECK(c.at(200) == 1.0);
  CHECK(c.at(399) == 0.0);
}

TEST_CASE("besov counterexample") {
  CHECK_THROWS_AS(besov_counterexample(0.5, Grid(1, 2.0, 16)), DomainError);
  CHECK_THROWS_AS(besov_counterexample(1.0, Grid(2, 2.0, 16)), DomainError);
  const Grid g(2, 2.0, 64);
  const ScalarField f = besov_counterexample(0.5, g);
  CHECK(f.singular());
  const auto x = g.position(g.flat(20, 40));
  const double r = std::hypot(x[0], x[1]);
  CHECK(f.at(20, 40) == doctest::Approx(eta_profile(r) * std::pow(r, -1.5)));
}

TEST_CASE("translation embedding restriction") {
  const Grid g(2, 2.0, 16);
  const ScalarField f = sample(TestFunctionSpec::gaussian(), g);
  const ScalarField t = translate(f, std::array<int, 2>{2, -1});
  CHECK(t.at(3, 5) == f.at(5, 4));
  CHECK(t.at(15, 5) == 0.0);
  const ScalarField u = translate(f, std::array<double, 2>{0.5, -0.25});
  CHECK(u.values().isApprox(t.values()));
  CHECK_THROWS_AS(translate(f, std::array<double, 2>{0.3, 0.0}), DomainError);

  const ScalarField big = embed(f, g.enlarged());
  CHECK(integral(big) == integral(f));
  CHECK(restrict_to(big, g).values().isApprox(f.values(), 0.0));
  CHECK_THROWS_AS(embed(f, g.refined()), DomainError);
}

TEST_CASE("boundary ratio") {
  const Grid g(1, 12.0, 256);
  CHECK(boundary_ratio(sample(TestFunctionSpec::gaussian(), g)) < 1e-30);
  CHECK(boundary_ratio(ScalarField(g)) == 0.0);
  CHECK(boundary_ratio(sample(TestFunctionSpec::gaussian(20.0), g)) > 0.5);
}

TEST_CASE("descriptors") {
  CHECK(TestFunctionSpec::parse("gaussian:sigma=0.5").sigma == 0.5);
  CHECK(TestFunctionSpec::parse("gaussian-derivative:order=3").order == 3);
  CHECK(TestFunctionSpec::parse("gaussian-derivative:order=3").label() == "gaussian_derivative(sigma=1,amp=1,order=3)");
  CHECK(TestFunctionSpec::gaussian().label() == "gaussian(sigma=1,amp=1)");
  CHECK_THROWS_AS(TestFunctionSpec::parse("cauchy"), DomainError);
  CHECK_THROWS_AS(TestFunctionSpec::parse("gaussian:sigma"), DomainError);
  CHECK_THROWS_AS(TestFunctionSpec::parse("gaussian:sigma=x"), DomainError);
}

TEST_CASE("field csv round trip") {
  const Grid g(2, 3.0, 8);
  ScalarField f = sample(TestFunctionSpec::gaussian(0.7), g);
  f[5] = 1.0 / 3.0;
  std::stringstream ss;
  write_field_csv(ss, f);
  const ScalarField r = read_field_csv(ss);
  CHECK(r.grid() == g);
  CHECK((r.values() == f.values()).all());
  CHECK(format_real(0.1) == "0.10000000000000001");
  std::stringstream bad("# 1,2\n0,1\n");
  CHECK_THROWS(read_field_csv(bad));
}
