#include "fraclab/constants.hpp"

#include <array>
#include <cmath>

namespace fraclab::constants {

namespace {

void check_dim(int n) {
  if (n != 1 && n != 2) throw DomainError("dimension must be 1 or 2, got " + std::to_string(n));
}

// Lanczos approximation valid for Re(z) >= 1/2; reflection handles (0, 1/2).
double lanczos_gamma(double x) {
  static constexpr double g = 7.0;
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) return pi / (std::sin(pi * x) * lanczos_gamma(1.0 - x));
  x -= 1.0;
  double a = c[0];
  const double t = x + g + 0.5;
  for (std::size_t i = 1; i < c.size(); ++i) a += c[i] / (x + static_cast<double>(i));
  return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma_fn requires a finite positive argument");
  // Integers are returned exactly, which the factorial identities in the tests rely on.
  if (x == std::floor(x) && x <= 171.0) {
    double r = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) r *= k;
    return r;
  }
  return lanczos_gamma(x);
}

double omega(int n) {
  check_dim(n);
  return n == 1 ? 2.0 : pi;
}

double mu(int n, double alpha) {
  check_dim(n);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("mu requires alpha in [0,1]");
  if (alpha == 1.0) return 0.0;
  return std::pow(2.0, alpha) * std::pow(pi, -0.5 * n) * gamma_fn(0.5 * (n + alpha + 1.0)) /
         gamma_fn(0.5 * (1.0 - alpha));
}

double nu(int n, double alpha) {
  check_dim(n);
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("nu requires alpha in (0,1)");
  // Gamma(-a/2) = Gamma(1 - a/2) / (-a/2)
  const double gamma_neg = gamma_fn(1.0 - 0.5 * alpha) / (-0.5 * alpha);
  return std::pow(2.0, alpha) * std::pow(pi, -0.5 * n) * gamma_fn(0.5 * (n + alpha)) / gamma_neg;
}

double riesz_const(int n) {
  check_dim(n);
  return std::pow(pi, -0.5 * (n + 1)) * gamma_fn(0.5 * (n + 1));
}

double riesz_potential_const(int n, double alpha) {
  check_dim(n);
  if (!(alpha > 0.0 && alpha < n)) throw DomainError("Riesz potential order must lie in (0,n)");
  return std::pow(2.0, -alpha) * std::pow(pi, -0.5 * n) * gamma_fn(0.5 * (n - alpha)) /
         gamma_fn(0.5 * alpha);
}

double mu_near_one_ratio(int n, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("mu_near_one_ratio requires alpha in (0,1)");
  return mu(n, alpha) * omega(n) / (1.0 - alpha);
}

double energy_limit_const(int n) { return n * omega(n) * mu(n, 0.0); }

ConstantsTable::ConstantsTable(int dim)
    : n(dim), omega(constants::omega(dim)), mu0(mu(dim, 0.0)), riesz_norm_const(riesz_const(dim)) {}

}  // namespace fraclab::constants
