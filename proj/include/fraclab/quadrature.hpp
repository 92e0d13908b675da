#pragma once

#include <limits>
#include <vector>

#include "fraclab/fields.hpp"

namespace fraclab::quadrature {

/// Real-space evaluation of the singular integral operators by lattice sums.
///
/// Inputs are extended outside their box by their far-field constant (the
/// common value of the boundary band, 0 for decaying families), so all
/// operators that annihilate constants can be applied to constant fields.
/// Odd kernels are summed in principal-value form over the whole lattice,
/// which is exact for zero-extended data; even kernels pick up the exterior
/// part analytically. The singular self-cell and near-diagonal quadrature
/// error is removed with the lattice-zeta constants of the local Taylor
/// terms.
struct QuadratureConfig {
  /// Outer truncation radius for the analytic exterior of even kernels, in multiples of L.
  double tail_box_factor = std::numeric_limits<double>::infinity();
  /// When > 0, offsets with |z| < pv_epsilon * h are dropped and no local correction is applied.
  double pv_epsilon = 0.0;
  /// Maximum boundary-band deviation from the far-field constant, relative to the field's range.
  double decay_threshold = 1e-6;
  enum class ClampPolicy { refuse, allow } clamp = ClampPolicy::refuse;
};

VectorField quad_nabla(const ScalarField& f, double alpha, const QuadratureConfig& cfg = {});
ScalarField quad_div(const VectorField& phi, double alpha, const QuadratureConfig& cfg = {});
ScalarField quad_frac_laplacian(const ScalarField& f, double alpha, const QuadratureConfig& cfg = {});
VectorField quad_riesz(const ScalarField& f, const QuadratureConfig& cfg = {});
ScalarField quad_riesz_potential(const ScalarField& f, double alpha, const QuadratureConfig& cfg = {});

/// mu_{n,beta} times the convolution with y (1 - eta_R(y)) / |y|^{n+beta+1}; bounded kernel.
VectorField quad_tail_op(const ScalarField& f, double beta, double radius, const QuadratureConfig& cfg = {});
/// The complementary eta_R-windowed near part; near + tail reassembles quad_nabla.
VectorField quad_near_op(const ScalarField& f, double beta, double radius, const QuadratureConfig& cfg = {});

/// D^a f(x) = int |f(x+y) - f(x)| / |y|^{n+a} dy. Pointwise >= |(-Delta)^{a/2} f| / |nu_{n,a}|.
ScalarField quad_dee_alpha(const ScalarField& f, double alpha, const QuadratureConfig& cfg = {});

/// int_{|y| > eps} y f(y + x) / |y|^{n+alpha+1} dy (no normalisation constant).
VectorField truncated_far_field(const ScalarField& f, double alpha, double eps);

// ---------------------------------------------------------------------------
// Building blocks, exposed for testing.

/// Hurwitz zeta(s, a) for real s != 1 and a > 0 (Euler-Maclaurin).
double hurwitz_zeta(double s, double a);
/// Lattice zeta Z_n(s) = sum over k in Z^n \ {0} of |k|^{-s}, analytically continued
/// (Z_1 = 2 zeta(s), Z_2 = 4 zeta(s/2) beta(s/2)).
double lattice_zeta(int n, double s);
/// Limit of (int_W |z|^g dz - sum_{k in W, k != 0} |k|^g) over growing cubes W: equals -Z_n(-g).
double singular_lattice_constant(int n, double g);
/// int over [-rho, rho]^n of |z|^g dz, g > -n.
double window_moment(int n, double g, double rho);
/// Windowed version of singular_lattice_constant with cube half-width m + 1/2.
double lattice_defect(int n, double g, int m);

/// out(x) = sum over nodes y of f(y) table(y - x); the table is indexed by
/// lattice offset d + N - 1 per axis (row-major, (2N-1)^n entries). Uses a
/// zero-padded FFT unless `direct` is set; both give the same lattice sum.
Eigen::ArrayXd lattice_correlate(const Grid& grid, const Eigen::ArrayXd& f, const std::vector<double>& table,
                                 bool direct = false);

/// int over {y : y outside [-L,L]^n, y inside [-T L, T L]^n} of |y - x|^{-s} dy, s > n.
double exterior_integral(const Grid& grid, std::array<double, 2> x, double s,
                         double outer_factor = std::numeric_limits<double>::infinity());

}  // namespace fraclab::quadrature
