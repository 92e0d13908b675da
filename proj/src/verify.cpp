#include "fraclab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fraclab/norms.hpp"
#include "fraclab/spectral.hpp"

namespace fraclab::verify {

using norms::lp_norm;

namespace {

void require_alphas(std::span<const double> alphas) {
  if (alphas.empty()) throw DomainError("empty order list");
}

double cell(const Grid& g) { return g.cell_measure(); }

/// ||R_k v_j||_1 over all pairs (j, k), as the L^1 norm of the matrix magnitude.
double riesz_of_vector_l1(const VectorField& v) {
  spectral::SpectralOptions opt;
  opt.tail_threshold = std::numeric_limits<double>::infinity();
  std::vector<spectral::MultiplierSpec> ms;
  for (int k = 0; k < v.dim(); ++k) ms.push_back(spectral::MultiplierSpec::riesz(k));
  Eigen::ArrayXd sq = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(v.grid().size()));
  for (int j = 0; j < v.dim(); ++j) {
    const ScalarField c = v.component_field(j);
    if (c.values().abs().maxCoeff() == 0.0) continue;
    for (const auto& out : spectral::apply_multipliers(c, ms, opt)) sq += out.values().square();
  }
  return sq.sqrt().sum() * cell(v.grid());
}

double rel_linf(const VectorField& a, const VectorField& ref) {
  const double scale = ref.magnitude().maxCoeff();
  return safe_ratio((a - ref).magnitude().maxCoeff(), scale);
}

double rel_linf(const ScalarField& a, const ScalarField& ref) {
  return safe_ratio((a - ref).values().abs().maxCoeff(), ref.values().abs().maxCoeff());
}

double far_field_completion(const ScalarField& f, double alpha) {
  const double mass = std::abs(integral(f));
  if (mass == 0.0) return 0.0;
  const int n = f.grid().dim();
  return constants::mu(n, alpha) * mass * quadrature::exterior_integral(f.grid(), {0.0, 0.0}, n + alpha);
}

}  // namespace

bool zero_mean(const ScalarField& f, double rel) {
  return std::abs(integral(f)) <= rel * lp_norm(f, 1.0);
}

std::vector<CheckResult> constants_audit(double exact_tol, double near_one_tol) {
  std::vector<CheckResult> out;
  auto exact = [&](std::string id, double param, double lhs, double rhs) {
    CheckResult c{std::move(id), param, lhs, rhs, safe_ratio(lhs, rhs), std::abs(lhs - rhs), false, ""};
    c.passed = c.aux <= exact_tol;
    c.anchor = "closed form";
    out.push_back(c);
  };
  exact("mu-1-0-times-pi", 1, constants::mu(1, 0.0) * constants::pi, 1.0);
  for (int n = 1; n <= 2; ++n)
    exact("mu-n-0", n, constants::mu(n, 0.0), std::pow(constants::pi, -0.5 * (n + 1)) * std::tgamma(0.5 * (n + 1)));
  for (int n = 1; n <= 2; ++n) {
    CheckResult c;
    c.check_id = "mu-near-one";
    c.anchor = "mu_{n,a} omega_n / (1 - a) -> 1";
    c.param = n;
    c.lhs = constants::mu_near_one_ratio(n, 0.999);
    c.rhs = 1.0;
    c.ratio = c.lhs;
    c.aux = std::abs(c.lhs - 1.0);
    c.passed = c.aux <= near_one_tol;
    out.push_back(c);
  }
  return out;
}

ConvergenceReport sweep_limit_zero(const ScalarField& f, double p, std::span<const double> alphas,
                                   const BackendOptions& b, double tol, double jitter) {
  require_alphas(alphas);
  if (p != 1.0 && p != 2.0) throw DomainError("limit sweep supports p = 1 and p = 2");
  if (p == 1.0 && !zero_mean(f))
    throw HypothesisError("nabla^alpha f -> R f in L^1 needs a zero-mean field; this one has nonzero integral");
  ConvergenceReport r;
  r.check_id = p == 1.0 ? "limit-zero-L1" : "limit-zero-L2";
  r.tolerance = tol;
  const VectorField rf = riesz(f, b);
  const double rn = lp_norm(rf, p);
  for (double a : alphas) {
    const VectorField d = nabla(f, a, b) - rf;
    ReportRow row{a, lp_norm(d, p), rn, 0.0};
    if (p == 1.0) row.aux2 = riesz_of_vector_l1(d);
    r.rows.push_back(row);
  }
  r.limit_estimate = r.rows.back().value;
  r.passed = monotone_decreasing(r.rows, jitter) && r.limit_estimate <= tol * rn;
  if (p == 1.0) r.note = "aux2 is the H1 surrogate ||R(nabla^a f - R f)||_1, qualitative on a finite box";
  return r;
}

ConvergenceReport sweep_limit_one(const ScalarField& f, double p, std::span<const double> alphas,
                                  const BackendOptions& b, double tol) {
  require_alphas(alphas);
  ConvergenceReport r;
  r.check_id = "limit-one";
  r.tolerance = tol;
  const VectorField grad = spectral::spectral_nabla(f, 1.0, b.pad);
  const double gn = lp_norm(grad, p);
  for (double a : alphas) {
    const double err = lp_norm(nabla(f, a, b) - grad, p);
    r.rows.push_back({a, safe_ratio(err, gn), err, gn});
  }
  r.limit_estimate = r.rows.back().value;
  r.passed = r.limit_estimate <= tol;
  return r;
}

ConvergenceReport energy_limit(const ScalarField& f, std::span<const double> alphas, const BackendOptions& b,
                               double tol) {
  require_alphas(alphas);
  ConvergenceReport r;
  r.check_id = "energy-limit";
  r.tolerance = tol;
  for (double a : alphas) {
    const double box = a * lp_norm(nabla(f, a, b), 1.0);
    const double tail = a * far_field_completion(f, a);
    r.rows.push_back({a, box + tail, box, tail});
  }
  r.limit_estimate = r.rows.back().value;
  if (zero_mean(f)) {
    r.passed = r.limit_estimate <= tol * lp_norm(riesz(f, b), 1.0);
    r.note = "zero mean: limit 0";
  } else {
    const double target = constants::energy_limit_const(f.grid().dim()) * std::abs(integral(f));
    r.passed = std::abs(r.limit_estimate - target) <= tol * target;
    r.note = "target " + std::to_string(target);
  }
  return r;
}

ConvergenceReport energy_limit_truncated(const ScalarField& f, double support_radius, double eps,
                                         std::span<const double> alphas, double tol) {
  require_alphas(alphas);
  if (!(eps > support_radius)) throw HypothesisError("truncation radius must exceed the support radius");
  const Grid& g = f.grid();
  const double peak = f.values().abs().maxCoeff();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto x = g.position(i);
    if (std::hypot(x[0], x[1]) > support_radius && std::abs(f[i]) > 1e-14 * peak)
      throw HypothesisError("field is not supported in the given ball");
  }
  if (g.half_width() < support_radius + eps) throw DomainError("box too small for the truncated far field");
  ConvergenceReport r;
  r.check_id = "energy-limit-truncated";
  r.tolerance = tol;
  const int n = g.dim();
  for (double a : alphas) {
    const double box = a * constants::mu(n, a) * lp_norm(quadrature::truncated_far_field(f, a, eps), 1.0);
    const double tail = a * far_field_completion(f, a);
    r.rows.push_back({a, box + tail, box, tail});
  }
  r.limit_estimate = r.rows.back().value;
  const double target = constants::energy_limit_const(n) * std::abs(integral(f));
  if (zero_mean(f)) {
    r.passed = r.limit_estimate <= tol * lp_norm(f, 1.0);
    r.note = "zero mean: limit 0";
  } else {
    r.passed = std::abs(r.limit_estimate - target) <= tol * target;
    r.note = "target " + std::to_string(target);
  }
  return r;
}

ConvergenceReport laplacian_identity_sweep(const ScalarField& f, double p, std::span<const double> alphas,
                                           const BackendOptions& b, double tol, double jitter) {
  require_alphas(alphas);
  if (!zero_mean(f)) throw HypothesisError("(-Delta)^{a/2} f -> f needs a field with vanishing mean");
  ConvergenceReport r;
  r.check_id = "laplacian-identity";
  r.tolerance = tol;
  const double fn = lp_norm(f, p);
  for (double a : alphas) r.rows.push_back({a, lp_norm(frac_laplacian(f, a, b) - f, p), fn, 0.0});
  r.limit_estimate = r.rows.back().value;
  r.passed = monotone_decreasing(r.rows, jitter) && r.limit_estimate <= tol * fn;
  return r;
}

CheckResult limit_shape_consistency(const ScalarField& f, std::span<const double> alphas, int pad, double slack) {
  require_alphas(alphas);
  const VectorField rf = spectral::spectral_riesz(f, pad);
  CheckResult c;
  c.check_id = "limit-shape";
  c.anchor = "||nabla^a f - R f||_2 <= ||(-Delta)^{a/2} f - f||_2";
  c.ratio = 0.0;
  for (double a : alphas) {
    const double lhs = lp_norm(spectral::spectral_nabla(f, a, pad) - rf, 2.0);
    const double rhs = lp_norm(spectral::spectral_frac_laplacian(f, a, pad) - f, 2.0);
    if (safe_ratio(lhs, rhs) >= c.ratio) {
      c.param = a;
      c.lhs = lhs;
      c.rhs = rhs;
      c.ratio = safe_ratio(lhs, rhs);
    }
  }
  c.aux = slack;
  c.passed = c.ratio <= 1.0 + slack;
  return c;
}

ConvergenceReport alpha_continuity_sweep(const ScalarField& f, double p, double alpha0,
                                         std::span<const double> deltas, const BackendOptions& b, double tol,
                                         double jitter) {
  require_alphas(deltas);
  if (!(alpha0 > 0.0 && alpha0 < 1.0)) throw DomainError("base order must lie in (0,1)");
  for (double d : deltas)
    if (!(alpha0 + d >= 0.0 && alpha0 + d <= 1.0)) throw DomainError("shifted order leaves [0,1]");
  ConvergenceReport r;
  r.check_id = "alpha-continuity";
  r.tolerance = tol;
  const VectorField base = nabla(f, alpha0, b);
  const double bn = lp_norm(base, p);
  for (double d : deltas) {
    const double diff = d == 0.0 ? 0.0 : lp_norm(nabla(f, alpha0 + d, b) - base, p);
    r.rows.push_back({d, safe_ratio(diff, bn), diff, bn});
  }
  r.limit_estimate = r.rows.back().value;
  r.passed = monotone_decreasing(r.rows, jitter) && r.limit_estimate <= tol;
  return r;
}

CheckResult lower_semicontinuity_probe(const ScalarField& f, std::span<const double> alphas, const BackendOptions& b,
                                       double slack) {
  require_alphas(alphas);
  CheckResult c;
  c.check_id = "lower-semicontinuity";
  c.anchor = "||R f||_1 <= liminf ||nabla^a f||_1";
  c.lhs = lp_norm(riesz(f, b), 1.0);
  c.rhs = std::numeric_limits<double>::infinity();
  for (double a : alphas) {
    const double v = lp_norm(nabla(f, a, b), 1.0);
    if (v < c.rhs) {
      c.rhs = v;
      c.param = a;
    }
  }
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.aux = slack;
  c.passed = c.lhs <= (1.0 + slack) * c.rhs;
  return c;
}

std::vector<CheckResult> interpolation_audit(const ScalarField& f, double p, double alpha,
                                             std::span<const double> betas, double gamma, const BackendOptions& b,
                                             double bound) {
  require_alphas(betas);
  for (double beta : betas)
    if (!(0.0 <= gamma && gamma <= beta && beta <= alpha && alpha <= 1.0))
      throw DomainError("interpolation audit needs 0 <= gamma <= beta <= alpha <= 1");
  std::map<double, double> cache;
  auto norm_at = [&](double s) {
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;
    const double v = lp_norm(nabla(f, s, b), p);
    cache.emplace(s, v);
    return v;
  };
  const double na = norm_at(alpha);
  const double ng = norm_at(gamma);
  const double fp = lp_norm(f, p);
  std::vector<CheckResult> out;
  for (double beta : betas) {
    CheckResult c;
    c.check_id = "interpolation";
    c.anchor = "gamma=" + std::to_string(gamma);
    c.param = beta;
    c.lhs = norm_at(beta);
    if (alpha == gamma) {
      c.rhs = c.lhs;
      c.aux = 1.0;
    } else {
      const double t = (alpha - beta) / (alpha - gamma);
      const double s = (beta - gamma) / (alpha - gamma);
      c.rhs = std::pow(ng, t) * std::pow(na, s);
      if (gamma == 0.0) c.aux = safe_ratio(c.lhs, std::pow(fp, t) * std::pow(na, s));
    }
    c.ratio = safe_ratio(c.lhs, c.rhs);
    c.passed = c.ratio <= bound;
    out.push_back(c);
  }
  if (out.size() >= 2) {
    auto smallest = std::min_element(out.begin(), out.end(), [](auto& x, auto& y) { return x.param < y.param; });
    auto middle = std::min_element(out.begin(), out.end(), [alpha](auto& x, auto& y) {
      return std::abs(x.param - alpha / 2) < std::abs(y.param - alpha / 2);
    });
    CheckResult u;
    u.check_id = "interpolation-uniform";
    u.anchor = "no blow-up as beta -> gamma";
    u.param = smallest->param;
    u.lhs = smallest->ratio;
    u.rhs = middle->ratio;
    u.ratio = safe_ratio(u.lhs, u.rhs);
    u.aux = middle->param;
    u.passed = u.ratio <= 2.0 && u.ratio >= 0.5;
    out.push_back(u);
  }
  return out;
}

std::vector<CheckResult> h1_bv_interpolation_audit(const ScalarField& f, double alpha, std::span<const double> betas,
                                                   const BackendOptions& b, double bound, double slope_tol,
                                                   double slope_beta_max) {
  require_alphas(betas);
  if (!zero_mean(f)) throw HypothesisError("Hardy-space interpolation needs a zero-mean field");
  for (double beta : betas)
    if (!(beta > 0.0 && beta <= alpha && alpha < 1.0)) throw DomainError("need 0 < beta <= alpha < 1");
  const double hardy = norms::hardy_norm(f, b).value;
  const double na = lp_norm(nabla(f, alpha, b), 1.0);
  const double fl1 = lp_norm(f, 1.0);
  const double scale = 2.0 * f.grid().dim() * constants::omega(f.grid().dim()) * fl1;
  std::vector<CheckResult> out;
  std::vector<ReportRow> blowup;
  for (double beta : betas) {
    CheckResult c;
    c.check_id = "h1-bv-ratio";
    c.anchor = "uniform in beta";
    c.param = beta;
    c.lhs = beta == alpha ? na : lp_norm(nabla(f, beta, b), 1.0);
    c.rhs = std::pow(hardy, (alpha - beta) / alpha) * std::pow(na, beta / alpha);
    c.ratio = safe_ratio(c.lhs, c.rhs);
    c.aux = hardy;
    c.passed = c.ratio <= bound;
    out.push_back(c);
  }
  for (double beta : betas) {
    const double gag = norms::gagliardo_seminorm(f, beta, 1.0);
    CheckResult c;
    c.check_id = "gagliardo-contrast";
    c.anchor = "beta [f]_{W^{beta,1}} against the hypothesised scale 2 n omega_n ||f||_1";
    c.param = beta;
    c.lhs = beta * gag;
    c.rhs = scale;
    c.ratio = safe_ratio(c.lhs, c.rhs);
    c.aux = gag;
    c.passed = c.ratio <= bound && c.ratio >= 1.0 / bound;
    out.push_back(c);
    if (beta <= slope_beta_max) blowup.push_back({beta, gag, 0.0, 0.0});
  }
  if (blowup.size() < 2) throw DomainError("slope fit needs at least two orders below the cutoff");
  CheckResult s;
  s.check_id = "gagliardo-slope";
  s.anchor = "[f]_{W^{beta,1}} ~ 1/beta";
  s.param = slope_beta_max;
  s.lhs = loglog_slope(blowup);
  s.rhs = -1.0;
  s.ratio = safe_ratio(s.lhs, s.rhs);
  s.aux = slope_tol;
  s.passed = std::abs(s.lhs + 1.0) <= slope_tol;
  out.push_back(s);
  return out;
}

CheckResult gagliardo_blowup_check(const ScalarField& f, double beta, double expected, double tol) {
  CheckResult c;
  c.check_id = "gagliardo-blowup";
  c.anchor = "beta [f]_{W^{beta,1}} stays finite as beta -> 0";
  c.param = beta;
  c.aux = norms::gagliardo_seminorm(f, beta, 1.0);
  c.lhs = beta * c.aux;
  c.rhs = expected;
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.passed = std::abs(c.lhs - expected) <= tol * std::abs(expected);
  return c;
}

std::vector<CheckResult> splitting_inequality_audit(const ScalarField& f, double alpha, double beta,
                                                    std::span<const double> radii, double c_max) {
  require_alphas(radii);
  if (!(0.0 < beta && beta < alpha && alpha < 1.0)) throw DomainError("need 0 < beta < alpha < 1");
  const int n = f.grid().dim();
  if (c_max <= 0.0) c_max = 2.0 * n * constants::omega(n);
  const double gb = norms::gagliardo_seminorm(f, beta, 1.0);
  const double ga = norms::gagliardo_seminorm(f, alpha, 1.0);
  const double fl1 = lp_norm(f, 1.0);
  std::vector<CheckResult> out;
  for (double radius : radii) {
    if (!(radius > 0.0)) throw DomainError("splitting radius must be positive");
    const double a = std::pow(radius, alpha - beta) * ga;
    const double bterm = std::pow(radius, -beta) / beta * fl1;
    CheckResult c;
    c.check_id = "splitting";
    c.anchor = "c_max=" + std::to_string(c_max);
    c.param = radius;
    c.lhs = gb;
    c.aux = bterm > 0.0 ? std::max(0.0, (gb - a) / bterm) : 0.0;
    c.rhs = a + c_max * bterm;
    c.ratio = safe_ratio(c.lhs, c.rhs);
    c.passed = c.aux <= c_max;
    out.push_back(c);
  }
  return out;
}

double uniform_bound_constant(int n, double p) {
  const double s = n * constants::omega(n);
  if (!(p >= 1.0)) throw DomainError("Lebesgue exponent must be >= 1");
  if (std::isinf(p)) return s;
  if (p == 1.0) return std::max(s, 1.0);
  const double q = 1.0 - 1.0 / p;
  return std::max(s, std::pow(s, q) * std::pow(q, q));
}

CheckResult uniform_bound_audit(const ScalarField& f, double alpha, double beta, double p, const BackendOptions& b) {
  if (!(0.0 <= beta && beta < alpha && alpha <= 1.0)) throw DomainError("need 0 <= beta < alpha <= 1");
  if (!(p >= 1.0) || std::isinf(p)) throw DomainError("uniform bound needs a finite exponent p >= 1");
  const int n = f.grid().dim();
  CheckResult c;
  c.check_id = "uniform-bound";
  c.anchor = "sup bound from L^p and C^{0,alpha}";
  c.param = beta;
  c.lhs = nabla(f, beta, b).magnitude().maxCoeff();
  const double fp = lp_norm(f, p);
  const double hol = norms::holder_seminorm(f, alpha);
  const double d = alpha * p + n;
  c.rhs = uniform_bound_constant(n, p) * constants::mu(n, beta) * d / ((alpha - beta) * (beta * p + n)) *
          std::pow(n / p + beta, (alpha - beta) / d) * std::pow(fp, p * (alpha - beta) / d) *
          std::pow(hol, (beta * p + n) / d);
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.aux = hol;
  c.passed = c.lhs <= c.rhs;
  return c;
}

ConvergenceReport uniform_convergence_sweep(const ScalarField& f, std::span<const double> betas,
                                            const BackendOptions& b, double jitter) {
  require_alphas(betas);
  ConvergenceReport r;
  r.check_id = "uniform-convergence";
  r.tolerance = jitter;
  const VectorField base = nabla(f, 0.0, b);
  const double scale = base.magnitude().maxCoeff();
  for (double beta : betas) r.rows.push_back({beta, (nabla(f, beta, b) - base).magnitude().maxCoeff(), scale, 0.0});
  r.limit_estimate = r.rows.back().value;
  r.passed = monotone_decreasing(r.rows, jitter);
  return r;
}

ConvergenceReport tail_scaling_sweep(const ScalarField& f, double beta, std::span<const double> radii,
                                     double slope_tol) {
  require_alphas(radii);
  ConvergenceReport r;
  r.check_id = "tail-scaling";
  r.tolerance = slope_tol;
  for (double radius : radii) r.rows.push_back({radius, lp_norm(quadrature::quad_tail_op(f, beta, radius), 1.0), 0, 0});
  r.fitted_slope = loglog_slope(r.rows);
  r.limit_estimate = r.rows.back().value;
  r.passed = std::abs(r.fitted_slope + beta) <= slope_tol;
  r.note = "expected slope -" + std::to_string(beta);
  return r;
}

CheckResult besov_strict_inclusion_demo(double alpha, const Grid& coarse, double stability, double growth) {
  if (coarse.dim() != 2) throw HypothesisError("the strict inclusion example needs n >= 2");
  const Grid fine = coarse.refined();
  const ScalarField fc = besov_counterexample(alpha, coarse);
  const ScalarField ff = besov_counterexample(alpha, fine);
  const double q = 2.0 / (2.0 - alpha);
  const double bc = norms::besov_sup_seminorm(fc, alpha), bf = norms::besov_sup_seminorm(ff, alpha);
  const double lc = lp_norm(fc, q), lf = lp_norm(ff, q);
  CheckResult c;
  c.check_id = "besov-strict-inclusion";
  c.anchor = "Besov seminorm bounded, L^{n/(n-a)} norm unbounded";
  c.param = alpha;
  c.lhs = std::abs(bf / bc - 1.0);
  c.rhs = lf / lc - 1.0;
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.aux = bf;
  c.passed = c.lhs <= stability && c.rhs > growth;
  return c;
}

CheckResult dee_norm_bound(const ScalarField& f, double alpha, double p) {
  const int n = f.grid().dim();
  CheckResult c;
  c.check_id = "dee-norm-bound";
  c.anchor = "p=" + std::to_string(p);
  c.param = alpha;
  c.lhs = lp_norm(quadrature::quad_dee_alpha(f, alpha), p);
  const double gp = lp_norm(spectral::spectral_nabla(f, 1.0), p);
  c.rhs = 2.0 * n * constants::omega(n) / (alpha * (1.0 - alpha)) * std::pow(lp_norm(f, p), alpha) *
          std::pow(gp, 1.0 - alpha);
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.aux = p;
  c.passed = c.lhs <= c.rhs;
  return c;
}

CheckResult dee_pointwise_bound(const ScalarField& f, double alpha) {
  const int n = f.grid().dim();
  const Eigen::ArrayXd d = std::abs(constants::nu(n, alpha)) * quadrature::quad_dee_alpha(f, alpha).values();
  const Eigen::ArrayXd lap = quadrature::quad_frac_laplacian(f, alpha).values().abs();
  CheckResult c;
  c.check_id = "dee-pointwise";
  c.anchor = "|(-Delta)^{a/2} f| <= |nu| D^a f";
  c.param = alpha;
  const Eigen::ArrayXd gap = d - lap;
  c.lhs = gap.minCoeff();
  c.rhs = 0.0;
  c.aux = d.maxCoeff();
  c.ratio = safe_ratio(c.lhs, c.aux);
  c.passed = c.lhs >= -1e-12 * c.aux;
  return c;
}

double backend_distance(const ScalarField& f, double alpha, int pad) {
  const VectorField s = spectral::spectral_nabla(f, alpha, pad);
  const VectorField q = alpha == 0.0 ? quadrature::quad_riesz(f) : quadrature::quad_nabla(f, alpha);
  return rel_linf(q, s);
}

CheckResult backend_agreement(const TestFunctionSpec& spec, const Grid& coarse, double alpha, int pad, double tol,
                              double min_gain) {
  CheckResult c;
  c.check_id = "backend-agreement-n" + std::to_string(coarse.dim());
  c.anchor = "spectral vs quadrature nabla^alpha, coarse and refined";
  c.param = alpha;
  c.lhs = backend_distance(sample(spec, coarse), alpha, pad);
  c.rhs = backend_distance(sample(spec, coarse.refined()), alpha, pad);
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.aux = tol;
  c.passed = std::max(c.lhs, c.rhs) <= tol && c.ratio >= min_gain;
  return c;
}

CheckResult riesz_sign_certification(const Grid& grid, int pad, double tol, double field_tol) {
  if (grid.dim() != 1) throw DomainError("sign certification runs on a 1-d grid");
  const ScalarField f = sample(TestFunctionSpec::parse("odd-gaussian"), grid);
  const VectorField q = quadrature::quad_riesz(f);
  CheckResult c;
  c.check_id = "riesz-sign";
  c.anchor = "R(x exp(-x^2))(0) = +1/sqrt(pi)";
  c.lhs = center_value(q.component_field(0));
  c.rhs = 1.0 / std::sqrt(constants::pi);
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.aux = rel_linf(spectral::spectral_riesz(f, pad), q);
  c.passed = std::abs(c.lhs - c.rhs) <= tol && c.aux <= field_tol;
  return c;
}

CheckResult duality_residual(const ScalarField& f, const VectorField& phi, double alpha, const BackendOptions& b,
                             double tol) {
  const ScalarField div = divergence(phi, alpha, b);
  const VectorField grad = nabla(f, alpha, b);
  const double h = cell(f.grid());
  const double a = (f.values() * div.values()).sum() * h;
  const double g = (grad.values() * phi.values()).sum() * h;
  CheckResult c;
  c.check_id = "duality";
  c.anchor = "int f div^a phi = -int nabla^a f . phi";
  c.param = alpha;
  c.lhs = std::abs(a + g);
  c.rhs = tol * lp_norm(f, 2.0) * lp_norm(phi, 2.0);
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.aux = a;
  c.passed = c.lhs <= c.rhs;
  return c;
}

CheckResult potential_semigroup(const ScalarField& f, double a, double b, const BackendOptions& backend, double tol) {
  const ScalarField twice = riesz_potential(riesz_potential(f, b, backend), a, backend);
  const ScalarField once = riesz_potential(f, a + b, backend);
  CheckResult c;
  c.check_id = "potential-semigroup-" + to_string(backend.kind);
  c.anchor = "I_a I_b = I_{a+b}";
  c.param = a + b;
  c.lhs = safe_ratio(lp_norm(twice - once, 2.0), lp_norm(once, 2.0));
  c.rhs = tol;
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.passed = c.lhs <= tol;
  return c;
}

CheckResult representation_formula(const ScalarField& f, double alpha, double beta, int pad, double tol) {
  if (!(0.0 <= beta && beta < alpha && alpha <= 1.0)) throw DomainError("need 0 <= beta < alpha <= 1");
  const VectorField lhs = spectral::spectral_nabla(f, beta, pad);
  const VectorField top = spectral::spectral_nabla(f, alpha, pad);
  VectorField rhs(f.grid());
  for (int j = 0; j < f.grid().dim(); ++j)
    rhs.set_component(j, spectral::spectral_riesz_potential(top.component_field(j), alpha - beta, pad));
  CheckResult c;
  c.check_id = "representation";
  c.anchor = "nabla^beta = I_{alpha-beta} nabla^alpha";
  c.param = beta;
  c.lhs = safe_ratio(lp_norm(lhs - rhs, 2.0), lp_norm(lhs, 2.0));
  c.rhs = tol;
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.aux = alpha;
  c.passed = c.lhs <= tol;
  return c;
}

CheckResult laplacian_agreement(const ScalarField& f, double alpha, int pad, double tol) {
  CheckResult c;
  c.check_id = "laplacian-agreement-n" + std::to_string(f.grid().dim());
  c.anchor = "spectral vs quadrature (-Delta)^{a/2}";
  c.param = alpha;
  c.lhs = rel_linf(quadrature::quad_frac_laplacian(f, alpha), spectral::spectral_frac_laplacian(f, alpha, pad));
  c.rhs = tol;
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.passed = c.lhs <= tol;
  return c;
}

CheckResult laplacian_self_adjointness(const ScalarField& f, const ScalarField& g, double alpha, double tol) {
  const ScalarField lf = quadrature::quad_frac_laplacian(f, alpha);
  const ScalarField lg = quadrature::quad_frac_laplacian(g, alpha);
  const double h = cell(f.grid());
  const double a = (f.values() * lg.values()).sum() * h;
  const double b = (g.values() * lf.values()).sum() * h;
  CheckResult c;
  c.check_id = "laplacian-self-adjoint";
  c.anchor = "int f L g = int g L f";
  c.param = alpha;
  c.lhs = std::abs(a - b);
  c.rhs = tol * 0.5 * (lp_norm(f, 2.0) * lp_norm(lg, 2.0) + lp_norm(g, 2.0) * lp_norm(lf, 2.0));
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.aux = a;
  c.passed = c.lhs <= c.rhs;
  return c;
}

CheckResult mihlin_uniformity(int n, double spread, double stability) {
  const auto coarse = spectral::log_spaced(1e-4, 1e4, 200);
  const auto fine = spectral::log_spaced(1e-4, 1e4, 400);
  double hi = 0.0, lo = std::numeric_limits<double>::infinity(), drift = 0.0;
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double a = i / 10.0, b = j / 10.0;
      const double mc = spectral::mihlin_norm_estimate(n, a, b, coarse, 1e-3);
      const double mf = spectral::mihlin_norm_estimate(n, a, b, fine, 1e-3);
      if (!std::isfinite(mc) || !std::isfinite(mf)) drift = std::numeric_limits<double>::infinity();
      hi = std::max(hi, mf);
      lo = std::min(lo, mf);
      drift = std::max(drift, std::abs(mf / mc - 1.0));
    }
  }
  CheckResult c;
  c.check_id = "mihlin-n" + std::to_string(n);
  c.anchor = "multiplier norm uniform in (alpha, beta)";
  c.lhs = hi;
  c.rhs = lo;
  c.ratio = safe_ratio(hi, lo);
  c.aux = drift;
  c.passed = std::isfinite(hi) && c.ratio <= spread && drift <= stability;
  return c;
}

}  // namespace fraclab::verify
