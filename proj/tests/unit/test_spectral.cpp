#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fraclab/norms.hpp"
#include "fraclab/spectral.hpp"

using namespace fraclab;
using namespace fraclab::spectral;

namespace {

const Grid line(1, 12.0, 1024);
const Grid plane(2, 8.0, 128);

double rel_inf(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b) {
  return (a - b).abs().maxCoeff() / b.abs().maxCoeff();
}

}  // namespace

TEST_CASE("symbols") {
  CHECK(MultiplierSpec::frac_laplacian(0.5).symbol({0.0, 0.0}) == std::complex<double>(0.0));
  CHECK(MultiplierSpec::riesz(0).symbol({0.0, 0.0}) == std::complex<double>(0.0));
  CHECK(MultiplierSpec::riesz(0).symbol({2.0, 0.0}) == std::complex<double>(0.0, 1.0));
  CHECK(MultiplierSpec::riesz(1).symbol({3.0, -4.0}).imag() == doctest::Approx(-0.8));
  CHECK(MultiplierSpec::bessel_ratio(0.5, 0.0).symbol({0.0, 0.0}).real() == 1.0);
  CHECK(MultiplierSpec::identity_plus_frac_laplacian(0.5).symbol({0.0, 0.0}).real() == 1.0);
  const double r = 0.3;
  CHECK(MultiplierSpec::frac_laplacian(0.4).symbol({r, 0.0}).real() == doctest::Approx(std::pow(2 * M_PI * r, 0.4)));
  CHECK(MultiplierSpec::frac_gradient(1.0, 0).symbol({r, 0.0}).imag() == doctest::Approx(2 * M_PI * r));
}

TEST_CASE("fractional laplacian of a gaussian at the origin") {
  const ScalarField g1 = sample(TestFunctionSpec::gaussian(), line);
  const ScalarField g2 = sample(TestFunctionSpec::gaussian(), plane);
  const double x2 = std::pow(line.spacing() / 2, 2);
  const double r2 = 2 * std::pow(plane.spacing() / 2, 2);
  for (double a : {0.2, 0.5, 0.8}) {
    CAPTURE(a);
    // Fourier integrals of |2 pi xi|^a against the gaussian transform, with
    // the first Kummer term for the offset of the nodes next to the origin.
    const double one = std::pow(2.0, a) * std::tgamma(0.5 * (a + 1)) / std::sqrt(M_PI) * (1 - (1 + a) * x2);
    const double two = std::pow(2.0, a) * std::tgamma(1 + 0.5 * a) * (1 - (1 + 0.5 * a) * r2);
    double last = 1.0;
    for (int pad : {2, 4, 8}) {
      const double err = std::abs(center_value(spectral_frac_laplacian(g1, a, pad)) / one - 1);
      CHECK(err < 0.6 * last);
      last = err;
    }
    CHECK(last < 4e-3);
    CHECK(center_value(spectral_frac_laplacian(g2, a, 4)) == doctest::Approx(two).epsilon(2e-3));
  }
}

TEST_CASE("riesz potential of a gaussian in the plane") {
  const ScalarField g = sample(TestFunctionSpec::gaussian(), plane);
  const double a = 0.5, r2 = 2 * std::pow(plane.spacing() / 2, 2);
  const double ref = std::pow(2.0, -a) * std::tgamma(1 - 0.5 * a) * (1 - (1 - 0.5 * a) * r2);
  // The zero bin carries none of the integrable singularity of the symbol.
  double last = 1.0;
  for (int pad : {2, 4, 8}) {
    const double err = std::abs(center_value(spectral_riesz_potential(g, a, pad)) / ref - 1);
    CHECK(err < 0.5 * last);
    last = err;
  }
  CHECK(last < 2e-3);
}

TEST_CASE("order one is the gradient and order zero the riesz transform") {
  const ScalarField g = sample(TestFunctionSpec::gaussian(), line);
  ScalarField d(line);
  for (int k = 0; k < line.points(); ++k) {
    const double x = line.coordinate(k);
    d[k] = -2 * x * std::exp(-x * x);
  }
  CHECK(rel_inf(spectral_nabla(g, 1.0, 8).component(0), d.values()) < 1e-8);
  CHECK((spectral_nabla(g, 0.0, 8).values() == spectral_riesz(g, 8).values()).all());
}

TEST_CASE("riesz transform of x exp(-x^2)") {
  const ScalarField f = sample(TestFunctionSpec::parse("odd-gaussian"), line);
  CHECK(center_value(spectral_riesz(f, 8).component_field(0)) == doctest::Approx(1 / std::sqrt(M_PI)).epsilon(1e-3));
}

TEST_CASE("divergence is minus the adjoint of the gradient") {
  const ScalarField f = sample(TestFunctionSpec::gaussian(), plane);
  VectorField phi(plane);
  phi.set_component(0, sample(TestFunctionSpec::gaussian_derivative(0.8), plane));
  phi.set_component(1, sample(TestFunctionSpec::gaussian(1.3, 0.4), plane));
  for (double a : {0.0, 0.3, 0.9}) {
    const double lhs = (f.values() * spectral_div(phi, a, 4).values()).sum();
    const double rhs = (spectral_nabla(f, a, 4).values() * phi.values()).sum();
    CHECK(std::abs(lhs + rhs) < 1e-10 * std::abs(rhs) + 1e-14);
  }
}

TEST_CASE("translation commutes with the operators") {
  const Grid g(1, 12.0, 512);
  const ScalarField f = sample(TestFunctionSpec::gaussian(0.7), g);
  const std::array<int, 2> s{17, 0};
  const ScalarField lhs = spectral_frac_laplacian(translate(f, s), 0.6, 8);
  const ScalarField rhs = translate(spectral_frac_laplacian(f, 0.6, 8), s);
  // Compare away from the zero-filled end.
  const auto n = 400;
  CHECK((lhs.values().head(n) - rhs.values().head(n)).abs().maxCoeff() < 1e-10);
}

TEST_CASE("refusals") {
  CHECK_THROWS_AS(spectral_frac_laplacian(sample(TestFunctionSpec::gaussian(8.0), line), 0.5), AliasingError);
  CHECK_THROWS_AS(spectral_riesz_potential(sample(TestFunctionSpec::gaussian(), line), 0.6), MeanHazardError);
  CHECK_NOTHROW(spectral_riesz_potential(sample(TestFunctionSpec::gaussian_derivative(), line), 0.6));
  CHECK_THROWS_AS(spectral_riesz_potential(sample(TestFunctionSpec::gaussian(), line), 1.0), DomainError);
  CHECK_THROWS_AS(spectral_nabla(sample(TestFunctionSpec::gaussian(), line), 0.5, 3), DomainError);
  CHECK_THROWS_AS(spectral_nabla(sample(TestFunctionSpec::gaussian(), line), 1.5), DomainError);
  CHECK_THROWS_AS(spectral_nabla(besov_counterexample(0.5, Grid(2, 2.0, 32)), 0.5), DomainError);
}

TEST_CASE("mihlin symbols") {
  CHECK(mihlin_symbol(0.5, 0.25, 1.0) == 0.5);
  CHECK(mihlin_symbol(0.0, 0.0, 7.0) == 0.5);
  const auto xi = log_spaced(1.0, 100.0, 3);
  REQUIRE(xi.size() == 3);
  CHECK(xi[1] == doctest::Approx(10.0));
  CHECK(xi[2] == doctest::Approx(100.0));
  const auto samples = log_spaced(1e-3, 1e3, 100);
  CHECK(mihlin_norm_estimate(1, 0.0, 0.0, samples, 1e-3) == doctest::Approx(0.5).epsilon(1e-12));
  // The symbol alone peaks at beta^{b/a} (a-b)^{1-b/a} / a.
  const double a = 1.0, b = 0.5;
  const double peak = std::pow(b, b / a) * std::pow(a - b, 1 - b / a) / a;
  CHECK(mihlin_norm_estimate(1, a, b, samples, 1e-3) >= peak * (1 - 1e-3));
  CHECK(mihlin_norm_estimate(2, a, b, samples, 1e-3) <= 1.0);
  CHECK_THROWS_AS(mihlin_norm_estimate(1, 0.3, 0.5, samples, 1e-3), DomainError);
  CHECK_THROWS_AS(log_spaced(0.0, 1.0, 5), DomainError);
}
