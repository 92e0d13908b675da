#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fraclab/fields.hpp"

namespace fraclab {

/// The field has too much mass near its box boundary for zero padding to
/// suppress wrap-around.
class AliasingError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A Riesz potential whose symbol is not locally integrable at the origin
/// was applied to a field with nonzero mean.
class MeanHazardError : public DomainError {
 public:
  using DomainError::DomainError;
};

namespace spectral {

enum class MultiplierKind {
  riesz_component,               ///< i xi_j / |xi|
  frac_laplacian,                ///< (2 pi |xi|)^alpha
  riesz_potential,               ///< (2 pi |xi|)^{-alpha}
  frac_gradient_component,       ///< i xi_j / |xi| (2 pi |xi|)^alpha
  bessel_ratio,                  ///< (2 pi |xi|)^beta / (1 + (2 pi |xi|)^alpha)
  identity_plus_frac_laplacian,  ///< 1 + (2 pi |xi|)^alpha
};

/// Fourier multiplier in the convention fhat(xi) = int f(x) exp(-2 pi i x.xi) dx.
struct MultiplierSpec {
  MultiplierKind kind = MultiplierKind::frac_laplacian;
  double alpha = 0.0;
  double beta = 0.0;
  int component = 0;

  static MultiplierSpec riesz(int j) { return {MultiplierKind::riesz_component, 0.0, 0.0, j}; }
  static MultiplierSpec frac_laplacian(double a) { return {MultiplierKind::frac_laplacian, a, 0.0, 0}; }
  static MultiplierSpec riesz_potential(double a) { return {MultiplierKind::riesz_potential, a, 0.0, 0}; }
  static MultiplierSpec frac_gradient(double a, int j) { return {MultiplierKind::frac_gradient_component, a, 0.0, j}; }
  static MultiplierSpec bessel_ratio(double a, double b) { return {MultiplierKind::bessel_ratio, a, b, 0}; }
  static MultiplierSpec identity_plus_frac_laplacian(double a) {
    return {MultiplierKind::identity_plus_frac_laplacian, a, 0.0, 0};
  }

  /// Symbol at xi (second entry ignored in 1-d). At xi = 0 the symbol takes
  /// its limit where finite and 0 otherwise.
  std::complex<double> symbol(std::array<double, 2> xi) const;
  /// Odd symbols must vanish on Nyquist bins along their component axis.
  bool odd() const {
    return kind == MultiplierKind::riesz_component || kind == MultiplierKind::frac_gradient_component;
  }
};

struct SpectralOptions {
  int pad = 4;                    ///< padded length per axis is pad * N; pad in {2, 4, 8}
  double tail_threshold = 1e-6;   ///< max allowed boundary_ratio of the input
  double mean_threshold = 1e-8;   ///< |int f| / ||f||_1 above which DC-singular potentials refuse
};

/// Zero-pads, transforms, multiplies by each symbol and crops back; one
/// output field per multiplier, sharing the forward transform.
std::vector<ScalarField> apply_multipliers(const ScalarField& f, std::span<const MultiplierSpec> ms,
                                           const SpectralOptions& opt = {});

ScalarField apply_multiplier(const ScalarField& f, const MultiplierSpec& m, int pad = 4);
ScalarField apply_multiplier(const ScalarField& f, const MultiplierSpec& m, const SpectralOptions& opt);

/// Fractional gradient; alpha = 0 is the Riesz transform and alpha = 1 the gradient.
VectorField spectral_nabla(const ScalarField& f, double alpha, int pad = 4);
VectorField spectral_riesz(const ScalarField& f, int pad = 4);
/// Fractional divergence: sum_j of the frac_gradient_component(alpha, j) multiplier on phi_j.
ScalarField spectral_div(const VectorField& phi, double alpha, int pad = 4);
ScalarField spectral_frac_laplacian(const ScalarField& f, double alpha, int pad = 4);
ScalarField spectral_riesz_potential(const ScalarField& f, double alpha, int pad = 4);

/// m_{a,b}(xi) = |xi|^b / (1 + |xi|^a) at radius r.
double mihlin_symbol(double alpha, double beta, double r);

/// Sampled Mihlin-Hormander norm of m_{alpha,beta} in R^n: max over
/// multi-indices |a| <= floor(n/2) + 1 and over the radial samples (and a
/// fan of directions in 2-d) of |xi^a d^a m(xi)|, derivatives by central
/// differences with step fd_step * |xi|.
double mihlin_norm_estimate(int n, double alpha, double beta, std::span<const double> xi_grid, double fd_step);

std::vector<double> log_spaced(double lo, double hi, int count);

}  // namespace spectral
}  // namespace fraclab
