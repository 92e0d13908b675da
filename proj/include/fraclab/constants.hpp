#pragma once

#include <stdexcept>
#include <string>

namespace fraclab {

/// Thrown when an argument lies outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an input violates a hypothesis of the result being checked
/// (for instance a nonzero-mean field fed to an L^1 limit that needs zero mean).
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace constants {

inline constexpr double pi = 3.14159265358979323846264338327950288;

/// Euler Gamma for x > 0 (Lanczos, g = 7, nine coefficients).
double gamma_fn(double x);

/// Volume of the unit ball in R^n, n in {1, 2}.
double omega(int n);

/// Normalisation of the fractional gradient,
///   mu_{n,a} = 2^a pi^{-n/2} Gamma((n+a+1)/2) / Gamma((1-a)/2),  a in [0,1].
/// mu_{n,1} is 0 (1/Gamma has a zero at the origin).
double mu(int n, double alpha);

/// Normalisation of the fractional Laplacian,
///   nu_{n,a} = 2^a pi^{-n/2} Gamma((n+a)/2) / Gamma(-a/2),  a in (0,1).
/// Always negative on (0,1).
double nu(int n, double alpha);

/// Prefactor pi^{-(n+1)/2} Gamma((n+1)/2) of the Riesz transform.
double riesz_const(int n);

/// Prefactor 2^{-a} pi^{-n/2} Gamma((n-a)/2) / Gamma(a/2) of the Riesz potential, a in (0,n).
double riesz_potential_const(int n, double alpha);

/// mu_{n,a} omega_n / (1 - a); tends to 1 as a -> 1^-.
double mu_near_one_ratio(int n, double alpha);

/// n omega_n mu_{n,0}: the energy limit constant multiplying |int f|.
double energy_limit_const(int n);

/// Cached per-dimension constants.
struct ConstantsTable {
  int n;
  double omega;
  double mu0;
  double riesz_norm_const;

  explicit ConstantsTable(int dim);
};

}  // namespace constants
}  // namespace fraclab
