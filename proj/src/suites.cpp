#include "fraclab/suites.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include "fraclab/verify.hpp"

namespace fraclab {

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "limits") return Suite::limits;
  if (name == "interpolation") return Suite::interpolation;
  if (name == "counterexample") return Suite::counterexample;
  if (name == "backends") return Suite::backends;
  throw ConfigError("unknown suite '" + name + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::limits: return "limits";
    case Suite::interpolation: return "interpolation";
    case Suite::counterexample: return "counterexample";
    case Suite::backends: return "backends";
  }
  return "";
}

namespace {

using Spec = TestFunctionSpec;

template <typename F>
void guarded(Report& r, const std::string& id, F&& check) {
  try {
    r.add(check());
  } catch (const std::exception& e) {
    r.add_failure(id, e.what());
  }
}

/// Passes when the check is refused with a HypothesisError.
void refusal(Report& r, const std::string& id, const std::function<void()>& check) {
  CheckResult c;
  c.check_id = id;
  c.lhs = c.rhs = 1.0;
  c.ratio = 1.0;
  try {
    check();
    c.anchor = "not refused";
  } catch (const HypothesisError& e) {
    c.passed = true;
    c.anchor = std::string("refused: ") + e.what();
  } catch (const std::exception& e) {
    c.anchor = std::string("wrong error: ") + e.what();
  }
  r.add(c);
}

BackendOptions backend_of(const RunConfig& cfg) {
  BackendOptions b;
  b.kind = cfg.backend;
  b.pad = cfg.pad;
  return b;
}

std::vector<double> orders_between(const std::vector<double>& v, double lo, double hi) {
  std::vector<double> out;
  for (double x : v)
    if (x > lo && x < hi) out.push_back(x);
  return out;
}

Report limits_suite(const RunConfig& cfg) {
  using namespace verify;
  Report r;
  const auto b = backend_of(cfg);
  const double jitter = cfg.tol("jitter");
  const Grid g = cfg.grid1.grid();
  const ScalarField gd = sample(Spec::gaussian_derivative(), g);
  const ScalarField ga = sample(Spec::gaussian(), g);
  const auto& al = cfg.limit_alphas;

  guarded(r, "limit-zero-L1", [&] { return sweep_limit_zero(gd, 1.0, al, b, cfg.tol("limit-zero"), jitter); });
  guarded(r, "limit-zero-L2", [&] { return sweep_limit_zero(ga, 2.0, al, b, cfg.tol("limit-zero"), jitter); });
  for (double p : {1.0, 2.0})
    guarded(r, "limit-one", [&] { return sweep_limit_one(ga, p, cfg.limit_one_alphas, b, cfg.tol("limit-one")); });

  guarded(r, "energy-limit", [&] {
    return energy_limit(sample(Spec::unit_mass_gaussian(g.dim()), g), al, b, cfg.tol("energy-limit"));
  });
  guarded(r, "energy-limit", [&] { return energy_limit(gd, al, b, cfg.tol("energy-limit")); });
  guarded(r, "energy-limit", [&] {
    return energy_limit(sample(Spec::indicator(0.0, 1.0, 0.2), g), al, b, cfg.tol("energy-limit-rough"));
  });
  if (cfg.has_dimension(2)) {
    guarded(r, "energy-limit", [&] {
      const Grid g2 = cfg.grid2.grid();
      return energy_limit(sample(Spec::unit_mass_gaussian(g2.dim()), g2), al, b, cfg.tol("energy-limit"));
    });
  }
  guarded(r, "energy-limit-truncated", [&] {
    return energy_limit_truncated(sample(Spec::indicator(-0.5, 0.5, 0.2), g), 1.0, 2.0, al,
                                  cfg.tol("energy-limit-truncated"));
  });
  guarded(r, "energy-limit-truncated", [&] {
    ScalarField w = sample(Spec::gaussian_derivative(0.3), g);
    w.values() *= cutoff_eta(1.0, g).values();
    return energy_limit_truncated(w, 1.0, 2.0, al, cfg.tol("energy-limit-truncated"));
  });

  for (double p : {2.0, 1.0})
    guarded(r, "laplacian-identity", [&] {
      return laplacian_identity_sweep(gd, p, cfg.laplacian_alphas, b, cfg.tol("laplacian-identity"), jitter);
    });
  guarded(r, "limit-shape", [&] { return limit_shape_consistency(gd, cfg.laplacian_alphas, cfg.pad); });
  guarded(r, "alpha-continuity", [&] {
    return alpha_continuity_sweep(ga, 2.0, 0.5, cfg.continuity_deltas, b, cfg.tol("alpha-continuity"), jitter);
  });
  guarded(r, "alpha-continuity", [&] {
    return alpha_continuity_sweep(gd, 1.0, 0.3, cfg.continuity_deltas, b, cfg.tol("alpha-continuity"), jitter);
  });
  guarded(r, "lower-semicontinuity",
          [&] { return lower_semicontinuity_probe(gd, al, b, cfg.tol("lower-semicontinuity")); });
  return r;
}

Report interpolation_suite(const RunConfig& cfg) {
  using namespace verify;
  Report r;
  const auto b = backend_of(cfg);
  const Grid g = cfg.grid1.grid();
  const ScalarField ga = sample(Spec::gaussian(), g);
  const ScalarField gd = sample(Spec::gaussian_derivative(), g);
  const double alpha = cfg.interpolation_alpha;
  const double bound = cfg.tol("interpolation");

  for (double gamma : cfg.interpolation_gammas) {
    guarded(r, "interpolation", [&] {
      return interpolation_audit(ga, 2.0, alpha, orders_between(cfg.interpolation_betas, gamma, alpha), gamma, b,
                                 bound);
    });
    guarded(r, "interpolation", [&] {
      return std::vector<CheckResult>{interpolation_audit(ga, 2.0, alpha, std::vector<double>{gamma}, gamma, b)[0],
                                      interpolation_audit(ga, 2.0, alpha, std::vector<double>{alpha}, gamma, b)[0]};
    });
  }
  guarded(r, "h1-bv-ratio", [&] {
    return h1_bv_interpolation_audit(gd, alpha, cfg.hardy_betas, b, bound, cfg.tol("gagliardo-slope"));
  });

  const Grid gi = cfg.gagliardo.grid();
  const ScalarField ind = sample(Spec::indicator(0.0, 1.0), gi);
  guarded(r, "gagliardo-blowup", [&] {
    // [1_{[0,1]}]_{W^{b,1}} = 4 / (b (1 - b))
    const double beta = cfg.blowup_beta;
    return gagliardo_blowup_check(ind, beta, 4.0 / (1.0 - beta), cfg.tol("gagliardo-blowup"));
  });
  guarded(r, "splitting", [&] { return splitting_inequality_audit(ind, 0.6, 0.3, cfg.splitting_radii); });

  guarded(r, "uniform-bound", [&] { return uniform_bound_audit(ga, 1.0, 0.5, 1.0, b); });
  guarded(r, "uniform-bound", [&] { return uniform_bound_audit(ga, 0.5, 0.1, 2.0, b); });
  guarded(r, "uniform-convergence",
          [&] { return uniform_convergence_sweep(ga, cfg.limit_alphas, b, cfg.tol("jitter")); });

  for (int n : cfg.dimensions)
    guarded(r, "mihlin-n" + std::to_string(n),
            [&] { return mihlin_uniformity(n, cfg.tol("mihlin-spread"), cfg.tol("mihlin-stability")); });

  for (int n : cfg.dimensions) {
    const Grid gn = n == 1 ? g : cfg.grid2.grid();
    const ScalarField f = sample(Spec::gaussian(), gn);
    for (double a : cfg.backend_alphas) {
      for (double p : {1.0, 2.0}) guarded(r, "dee-norm-bound", [&] { return dee_norm_bound(f, a, p); });
      guarded(r, "dee-pointwise", [&] { return dee_pointwise_bound(f, a); });
    }
  }

  const Grid gt = cfg.tail.grid();
  const ScalarField ft = sample(Spec::gaussian_derivative(), gt);
  for (double beta : cfg.tail_betas)
    guarded(r, "tail-scaling", [&] { return tail_scaling_sweep(ft, beta, cfg.tail_radii, cfg.tol("tail-slope")); });
  return r;
}

Report counterexample_suite(const RunConfig& cfg) {
  using namespace verify;
  Report r;
  const auto b = backend_of(cfg);
  for (double a : cfg.besov_alphas)
    guarded(r, "besov-strict-inclusion", [&] {
      return besov_strict_inclusion_demo(a, cfg.besov.grid(), cfg.tol("besov-stability"), cfg.tol("besov-growth"));
    });
  const Grid g = cfg.grid1.grid();
  const ScalarField ga = sample(Spec::gaussian(), g);
  refusal(r, "refuse-limit-zero-L1-nonzero-mean",
          [&] { sweep_limit_zero(ga, 1.0, cfg.limit_alphas, b); });
  refusal(r, "refuse-laplacian-identity-nonzero-mean",
          [&] { laplacian_identity_sweep(ga, 2.0, cfg.laplacian_alphas, b); });
  refusal(r, "refuse-besov-n1", [&] { besov_strict_inclusion_demo(0.5, Grid(1, 2.0, 128)); });
  refusal(r, "refuse-truncation-inside-support", [&] {
    energy_limit_truncated(sample(Spec::indicator(-0.5, 0.5, 0.2), g), 1.0, 0.5, cfg.limit_alphas);
  });
  return r;
}

Report backends_suite(const RunConfig& cfg) {
  using namespace verify;
  Report r;
  guarded(r, "constants", [&] { return constants_audit(cfg.tol("constants-exact"), cfg.tol("constants-near-one")); });
  const Grid g = cfg.grid1.grid();
  guarded(r, "riesz-sign",
          [&] { return riesz_sign_certification(g, cfg.pad, cfg.tol("riesz-sign"), cfg.tol("riesz-field")); });

  for (int n : cfg.dimensions) {
    const Grid coarse = n == 1 ? cfg.agreement1.grid() : cfg.agreement2.grid();
    const int pad = n == 1 ? cfg.pad : cfg.agreement2_pad;
    for (double a : cfg.backend_alphas)
      guarded(r, "backend-agreement-n" + std::to_string(n), [&] {
        return backend_agreement(Spec::gaussian(), coarse, a, pad, cfg.tol("backend-agreement"),
                                 cfg.tol("backend-gain"));
      });
  }

  struct Pair {
    Spec f, phi;
  };
  const std::vector<Pair> pairs{
      {Spec::gaussian(), Spec::gaussian(0.7)},
      {Spec::gaussian_derivative(), Spec::gaussian(1.5)},
      {Spec::indicator(0.0, 1.0, 0.3), Spec::gaussian_derivative(0.8)},
  };
  for (Backend kind : {Backend::spectral, Backend::quadrature}) {
    BackendOptions b;
    b.kind = kind;
    b.pad = cfg.pad;
    for (const auto& pair : pairs) {
      const ScalarField f = sample(pair.f, g);
      VectorField phi(g);
      phi.set_component(0, sample(pair.phi, g));
      for (double a : cfg.backend_alphas)
        guarded(r, "duality", [&] { return duality_residual(f, phi, a, b, cfg.tol("duality")); });
    }
  }

  for (int n : cfg.dimensions) {
    const Grid gn = n == 1 ? g : cfg.agreement2.grid();
    const int pad = n == 1 ? cfg.pad : cfg.agreement2_pad;
    const ScalarField f = sample(Spec::gaussian(), gn);
    for (double a : cfg.backend_alphas)
      guarded(r, "laplacian-agreement-n" + std::to_string(n),
              [&] { return laplacian_agreement(f, a, pad, cfg.tol("laplacian-agreement")); });
  }
  guarded(r, "laplacian-self-adjoint", [&] {
    return laplacian_self_adjointness(sample(Spec::gaussian(), g), sample(Spec::gaussian_derivative(), g), 0.5,
                                      cfg.tol("self-adjoint"));
  });

  // Vanishing moments up to order 7 keep the potentials decaying inside the box.
  const ScalarField smooth = sample(Spec::gaussian_derivative(1.0, 1.0, 8), g);
  for (Backend kind : {Backend::spectral, Backend::quadrature}) {
    BackendOptions b;
    b.kind = kind;
    b.pad = cfg.pad;
    const double tol = cfg.tol(kind == Backend::spectral ? "semigroup-spectral" : "semigroup-quadrature");
    guarded(r, "potential-semigroup-" + to_string(kind), [&] { return potential_semigroup(smooth, 0.3, 0.4, b, tol); });
  }
  for (double beta : {0.0, 0.3})
    guarded(r, "representation",
            [&] { return representation_formula(smooth, 0.8, beta, cfg.pad, cfg.tol("representation")); });
  return r;
}

void write_reports(const Report& r, const std::filesystem::path& dir, const std::string& name) {
  std::ofstream csv(dir / (name + ".csv"), std::ios::binary);
  r.write_csv(csv);
  std::ofstream summary(dir / (name + "_summary.txt"), std::ios::binary);
  r.write_summary(summary);
  summary << "SUITE," << r.passed() << '/' << r.total() << '\n';
  if (!csv || !summary) throw ConfigError("cannot write reports to '" + dir.string() + "'");
}

}  // namespace

Report run_suite(Suite s, const RunConfig& cfg) {
  switch (s) {
    case Suite::limits: return limits_suite(cfg);
    case Suite::interpolation: return interpolation_suite(cfg);
    case Suite::counterexample:
      if (!cfg.has_dimension(2)) throw ConfigError("the counterexample suite needs a 2-d grid (dimensions = 1,2)");
      return counterexample_suite(cfg);
    case Suite::backends: return backends_suite(cfg);
    case Suite::all: break;
  }
  throw ConfigError("run_suite takes a single suite");
}

int cmd_verify(const std::string& suite, const std::optional<std::string>& config_path,
               const std::optional<std::string>& out_dir, std::ostream& log) {
  RunConfig cfg;
  std::vector<Suite> order;
  try {
    if (config_path) cfg = load_config(*config_path);
    const Suite s = parse_suite(suite);
    if (s == Suite::all)
      order = {Suite::backends, Suite::limits, Suite::interpolation, Suite::counterexample};
    else
      order = {s};
    if (std::find(order.begin(), order.end(), Suite::counterexample) != order.end() && !cfg.has_dimension(2))
      throw ConfigError("the counterexample suite needs a 2-d grid (dimensions = 1,2)");
    if (out_dir) cfg.output_dir = *out_dir;
    std::filesystem::create_directories(cfg.output_dir);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return exit_usage;
  }

  bool ok = true;
  int passed = 0, total = 0;
  for (Suite s : order) {
    Report r;
    try {
      r = run_suite(s, cfg);
    } catch (const std::exception& e) {
      r.add_failure(to_string(s), e.what());
    }
    try {
      write_reports(r, cfg.output_dir, to_string(s));
    } catch (const std::exception& e) {
      log << "error: " << e.what() << '\n';
      return exit_usage;
    }
    log << to_string(s) << ": " << r.passed() << '/' << r.total() << " passed\n";
    ok = ok && r.all_passed();
    passed += r.passed();
    total += r.total();
  }
  if (order.size() > 1) {
    std::ofstream all(std::filesystem::path(cfg.output_dir) / "all_summary.txt", std::ios::binary);
    for (Suite s : order) all << to_string(s) << ".csv\n";
    all << "SUITE," << passed << '/' << total << '\n';
  }
  return ok ? exit_pass : exit_fail;
}

}  // namespace fraclab
