#pragma once

#include <span>
#include <vector>

#include "fraclab/backend.hpp"
#include "fraclab/report.hpp"

namespace fraclab::verify {

/// |int f| <= rel * ||f||_1.
bool zero_mean(const ScalarField& f, double rel = 1e-8);

/// Normalisation constants against std::tgamma: mu_{1,0} pi = 1, the
/// closed form of mu_{n,0} for n = 1, 2 (both to `exact_tol`), and
/// mu_{n,a} omega_n / (1 - a) at a = 0.999 within `near_one_tol` of 1.
std::vector<CheckResult> constants_audit(double exact_tol = 1e-12, double near_one_tol = 1e-2);

// ---------------------------------------------------------------------------
// Limits in the order parameter

/// ||nabla^a f - R f||_p along descending alphas. Passes when the values
/// decrease up to `jitter` and the last is at most tol * ||R f||_p. For
/// p = 1 the field must have zero mean; aux2 carries ||R(nabla^a f - R f)||_1.
ConvergenceReport sweep_limit_zero(const ScalarField& f, double p, std::span<const double> alphas,
                                   const BackendOptions& b, double tol = 0.05, double jitter = 0.05);

/// ||nabla^a f - grad f||_p / ||grad f||_p along ascending alphas; the
/// gradient is the spectral one. Passes when the last value is at most tol.
ConvergenceReport sweep_limit_one(const ScalarField& f, double p, std::span<const double> alphas,
                                  const BackendOptions& b, double tol = 0.02);

/// a ||nabla^a f||_1 along descending alphas. The box integral is completed
/// by the far field mu_{n,a} |int f| |x|^{-n-a} outside the box (aux1 and
/// aux2 hold the two parts). The target is n omega_n mu_{n,0} |int f|; for
/// zero-mean f the last value must instead be at most tol * ||R f||_1.
ConvergenceReport energy_limit(const ScalarField& f, std::span<const double> alphas, const BackendOptions& b,
                               double tol = 0.05);

/// a mu_{n,a} || int_{|y|>eps} y f(x+y) / |y|^{n+a+1} dy ||_1 for f supported
/// in the ball of radius `support_radius` < eps, completed outside the box
/// as in energy_limit.
ConvergenceReport energy_limit_truncated(const ScalarField& f, double support_radius, double eps,
                                         std::span<const double> alphas, double tol = 0.05);

/// ||(-Delta)^{a/2} f - f||_p along descending alphas for zero-mean f;
/// passes when decreasing and the last value is at most tol * ||f||_p.
ConvergenceReport laplacian_identity_sweep(const ScalarField& f, double p, std::span<const double> alphas,
                                           const BackendOptions& b, double tol = 0.03, double jitter = 0.05);

/// max over alphas of ||nabla^a f - R f||_2 / ||(-Delta)^{a/2} f - f||_2 in the
/// spectral engine; the Riesz symbol has modulus one, so this is at most 1 + slack.
CheckResult limit_shape_consistency(const ScalarField& f, std::span<const double> alphas, int pad,
                                    double slack = 1e-6);

/// ||nabla^{a0+d} f - nabla^{a0} f||_p / ||nabla^{a0} f||_p along descending deltas.
ConvergenceReport alpha_continuity_sweep(const ScalarField& f, double p, double alpha0,
                                         std::span<const double> deltas, const BackendOptions& b,
                                         double tol = 0.01, double jitter = 0.05);

/// ||R f||_1 <= (1 + slack) min over alphas of ||nabla^a f||_1.
CheckResult lower_semicontinuity_probe(const ScalarField& f, std::span<const double> alphas, const BackendOptions& b,
                                       double slack = 0.02);

// ---------------------------------------------------------------------------
// Inequality audits

/// ratio_b = ||nabla^b f||_p / (||nabla^g f||_p^{(a-b)/(a-g)} ||nabla^a f||_p^{(b-g)/(a-g)})
/// per beta (pass when <= bound; aux holds the variant with ||f||_p in place
/// of ||nabla^0 f||_p when gamma = 0), plus a closing uniformity check
/// comparing the ratio at the smallest beta with the one nearest alpha / 2.
std::vector<CheckResult> interpolation_audit(const ScalarField& f, double p, double alpha,
                                             std::span<const double> betas, double gamma, const BackendOptions& b,
                                             double bound = 10.0);

/// ratio_b = ||nabla^b f||_1 / (||f||_{H^1}^{(a-b)/a} ||nabla^a f||_1^{b/a}) per
/// beta, then the Gagliardo contrast: b [f]_{W^{b,1}} per beta (aux: the
/// seminorm) and a slope check of log [f]_{W^{b,1}} against log b over the
/// betas <= slope_beta_max, which must be -1 within slope_tol.
std::vector<CheckResult> h1_bv_interpolation_audit(const ScalarField& f, double alpha, std::span<const double> betas,
                                                   const BackendOptions& b, double bound = 10.0,
                                                   double slope_tol = 0.15, double slope_beta_max = 0.1);

/// beta [f]_{W^{beta,1}} against a known value, relative tolerance `tol`.
CheckResult gagliardo_blowup_check(const ScalarField& f, double beta, double expected, double tol = 0.05);

/// [f]_{W^{b,1}} <= R^{a-b} [f]_{W^{a,1}} + c R^{-b} / b ||f||_1 per radius,
/// with the smallest feasible c in aux; passes when c <= c_max (default 2 n omega_n).
std::vector<CheckResult> splitting_inequality_audit(const ScalarField& f, double alpha, double beta,
                                                    std::span<const double> radii, double c_max = 0.0);

/// The explicit sup-norm bound for nabla^beta f in terms of ||f||_p and the
/// C^{0,alpha} seminorm, with c_{n,p} from uniform_bound_constant.
CheckResult uniform_bound_audit(const ScalarField& f, double alpha, double beta, double p, const BackendOptions& b);

/// c_{n,p}: the constant of the uniform bound.
double uniform_bound_constant(int n, double p);

/// ||nabla^b f - nabla^0 f||_inf along descending betas; passes when decreasing.
ConvergenceReport uniform_convergence_sweep(const ScalarField& f, std::span<const double> betas,
                                            const BackendOptions& b, double jitter = 0.05);

/// ||nabla^b_{>=R} f||_1 against R; passes when the log-log slope is -beta within slope_tol.
ConvergenceReport tail_scaling_sweep(const ScalarField& f, double beta, std::span<const double> radii,
                                     double slope_tol = 0.05);

/// On `coarse` and its refinement: Besov seminorm relative change (lhs)
/// and L^{n/(n-a)} growth (rhs) of eta_1 |x|^{a-n}. Passes when the
/// change is within `stability` and the growth exceeds `growth`.
CheckResult besov_strict_inclusion_demo(double alpha, const Grid& coarse, double stability = 0.10,
                                        double growth = 0.20);

/// ||D^a f||_p <= 2 n omega_n / (a (1-a)) ||f||_p^a ||grad f||_p^{1-a}.
CheckResult dee_norm_bound(const ScalarField& f, double alpha, double p);
/// min over nodes of |nu| D^a f - |(-Delta)^{a/2} f| >= 0 (both by quadrature).
CheckResult dee_pointwise_bound(const ScalarField& f, double alpha);

// ---------------------------------------------------------------------------
// Backend cross-checks

/// Relative L^inf distance between the two engines' nabla^alpha f.
double backend_distance(const ScalarField& f, double alpha, int pad);

/// Agreement on `coarse` and its refinement: lhs is the coarse distance,
/// rhs the fine one, ratio their quotient. Passes when the fine distance is
/// at most tol and the ratio at least min_gain.
CheckResult backend_agreement(const TestFunctionSpec& spec, const Grid& coarse, double alpha, int pad,
                              double tol = 1e-2, double min_gain = 1.5);

/// Quadrature Riesz transform of x exp(-x^2) at the origin against 1/sqrt(pi)
/// (lhs, rhs), with the spectral field's relative L^inf distance in aux.
CheckResult riesz_sign_certification(const Grid& grid, int pad, double tol = 1e-3, double field_tol = 1e-2);

/// |int f div^a phi + int nabla^a f . phi| against tol ||f||_2 ||phi||_2.
CheckResult duality_residual(const ScalarField& f, const VectorField& phi, double alpha, const BackendOptions& b,
                             double tol = 1e-3);

/// I_a I_b f against I_{a+b} f, relative L^2.
CheckResult potential_semigroup(const ScalarField& f, double a, double b, const BackendOptions& backend, double tol);

/// nabla^beta f against I_{alpha-beta} nabla^alpha f, relative L^2 (spectral).
CheckResult representation_formula(const ScalarField& f, double alpha, double beta, int pad, double tol = 1e-8);

/// Relative L^inf distance of the two engines' fractional Laplacians.
CheckResult laplacian_agreement(const ScalarField& f, double alpha, int pad, double tol = 2e-2);

/// |int f L g - int g L f| for the quadrature fractional Laplacian L.
CheckResult laplacian_self_adjointness(const ScalarField& f, const ScalarField& g, double alpha, double tol = 1e-6);

/// Mihlin norms over the (alpha, beta) grid {0, 0.1, ..., 1}^2 with beta <= alpha:
/// lhs the max, rhs the min, ratio max/min (must be <= spread), aux the
/// largest relative change under doubling of the xi samples (must be <= stability).
CheckResult mihlin_uniformity(int n, double spread = 2.0, double stability = 0.05);

}  // namespace fraclab::verify
