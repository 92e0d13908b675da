#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fraclab/field_io.hpp"
#include "fraclab/norms.hpp"
#include "fraclab/suites.hpp"
#include "fraclab/verify.hpp"

using namespace fraclab;

namespace {

struct FieldOptions {
  std::string field = "gaussian";
  int n = 1;
  double half_width = 12.0;
  int points = 1024;
  std::string backend = "spectral";
  int pad = 8;

  void attach(CLI::App* app) {
    app->add_option("--field", field, "test field, e.g. gaussian, odd-gaussian, indicator:a=0,b=1,w=0.2");
    app->add_option("--n", n, "dimension (1 or 2)");
    app->add_option("--L", half_width, "box half width");
    app->add_option("--N", points, "points per axis (even)");
    app->add_option("--backend", backend, "spectral or quadrature");
    app->add_option("--pad", pad, "spectral zero-padding factor (2, 4 or 8)");
  }
  ScalarField sampled() const { return sample(TestFunctionSpec::parse(field), Grid(n, half_width, points)); }
  BackendOptions options() const {
    BackendOptions b;
    b.kind = parse_backend(backend);
    b.pad = pad;
    return b;
  }
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw DomainError("malformed number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty parameter list");
  return out;
}

int run_sweep(const std::string& op, const FieldOptions& fo, const std::string& alphas_text, double p, double alpha0,
              double beta, const std::string& out) {
  const auto alphas = parse_list(alphas_text);
  ScalarField f = fo.sampled();
  const BackendOptions b = fo.options();
  if (op == "energy" && !verify::zero_mean(f)) {
    // The energy limit is linear in |int f|; report it per unit mass.
    f.values() /= std::abs(integral(f));
    std::cout << "field normalised to unit mass\n";
  }
  ConvergenceReport r;
  if (op == "nabla-vs-riesz") r = verify::sweep_limit_zero(f, p, alphas, b);
  else if (op == "nabla-vs-grad") r = verify::sweep_limit_one(f, p, alphas, b);
  else if (op == "energy") r = verify::energy_limit(f, alphas, b);
  else if (op == "laplacian-identity") r = verify::laplacian_identity_sweep(f, p, alphas, b);
  else if (op == "alpha-continuity") r = verify::alpha_continuity_sweep(f, p, alpha0, alphas, b);
  else if (op == "tail-scaling") r = verify::tail_scaling_sweep(f, beta, alphas);
  else throw CLI::ValidationError("sweep", "unknown sweep '" + op + "'");
  Report rep;
  rep.add(r);
  std::ofstream csv(out + ".csv", std::ios::binary);
  rep.write_csv(csv);
  std::ofstream dat(out + ".dat", std::ios::binary);
  write_dat(dat, r);
  if (!csv || !dat) throw DomainError("cannot write '" + out + "'");
  rep.write_summary(std::cout);
  return r.passed ? exit_pass : exit_fail;
}

int run_eval(const std::string& op, const FieldOptions& fo, double alpha, double radius, const std::string& out) {
  const ScalarField f = fo.sampled();
  const BackendOptions b = fo.options();
  const int n = f.grid().dim();
  auto write_scalar = [&](const ScalarField& s) {
    write_field_csv(out, s);
    std::cout << "center " << format_real(center_value(s)) << '\n';
  };
  auto write_vector = [&](const VectorField& v) {
    write_field_csv(out, v);
    std::cout << "center " << format_real(center_value(v.component_field(0))) << '\n';
  };
  if (op == "nabla") write_vector(nabla(f, alpha, b));
  else if (op == "riesz") write_vector(riesz(f, b));
  else if (op == "laplacian") write_scalar(frac_laplacian(f, alpha, b));
  else if (op == "potential") {
    if (!(alpha > 0.0 && alpha < n)) throw DomainError("Riesz potential order must lie in (0, n)");
    write_scalar(riesz_potential(f, alpha, b));
  } else if (op == "div") {
    VectorField phi(f.grid());
    phi.set_component(0, f);
    write_scalar(divergence(phi, alpha, b));
  } else if (op == "dee") write_scalar(quadrature::quad_dee_alpha(f, alpha, b.quad));
  else if (op == "tail-op") write_vector(quadrature::quad_tail_op(f, alpha, radius, b.quad));
  else throw CLI::ValidationError("eval", "unknown operator '" + op + "'");
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fraclab: fractional gradients, Riesz transforms and numerical checks of their limits"};
  app.require_subcommand(1);

  std::string suite = "all", config_path, out_dir;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite and write CSV reports");
  verify_cmd->add_option("--suite", suite, "all, limits, interpolation, counterexample or backends");
  verify_cmd->add_option("--config", config_path, "key = value configuration file");
  verify_cmd->add_option("--out", out_dir, "output directory (overrides the config)");

  std::string sweep_op, alphas, sweep_out = "sweep";
  double p = 2.0, alpha0 = 0.5, beta = 0.3;
  FieldOptions sweep_field;
  auto* sweep_cmd = app.add_subcommand("sweep", "run one parameter sweep");
  sweep_cmd->add_option("op", sweep_op,
                        "nabla-vs-riesz, nabla-vs-grad, energy, laplacian-identity, alpha-continuity, tail-scaling")
      ->required();
  sweep_field.attach(sweep_cmd);
  sweep_cmd->add_option("--alphas", alphas, "comma-separated orders (deltas for alpha-continuity, radii for tail-scaling)")
      ->required();
  sweep_cmd->add_option("--p", p, "Lebesgue exponent");
  sweep_cmd->add_option("--alpha0", alpha0, "base order for alpha-continuity");
  sweep_cmd->add_option("--beta", beta, "order for tail-scaling");
  sweep_cmd->add_option("--out", sweep_out, "output prefix; writes <out>.csv and <out>.dat");

  std::string eval_op, eval_out = "field.csv";
  double alpha = 0.5, radius = 1.0;
  FieldOptions eval_field;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one operator and write the field");
  eval_cmd->add_option("op", eval_op, "nabla, div, laplacian, riesz, potential, dee, tail-op")->required();
  eval_field.attach(eval_cmd);
  eval_cmd->add_option("--alpha", alpha, "operator order");
  eval_cmd->add_option("--radius", radius, "cutoff radius for tail-op");
  eval_cmd->add_option("--out", eval_out, "output field CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    if (verify_cmd->parsed())
      return cmd_verify(suite, config_path.empty() ? std::nullopt : std::optional<std::string>(config_path),
                        out_dir.empty() ? std::nullopt : std::optional<std::string>(out_dir), std::cout);
    if (sweep_cmd->parsed()) return run_sweep(sweep_op, sweep_field, alphas, p, alpha0, beta, sweep_out);
    if (eval_cmd->parsed()) return run_eval(eval_op, eval_field, alpha, radius, eval_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const HypothesisError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return exit_fail;
  }
  return exit_usage;
}
