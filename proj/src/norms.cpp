#include "fraclab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fraclab/parallel.hpp"

namespace fraclab::norms {

namespace {

double lp_of(const Eigen::ArrayXd& mag, double p, double cell) {
  if (!(p >= 1.0)) throw DomainError("Lebesgue exponent must be >= 1");
  if (mag.size() == 0) return 0.0;
  if (std::isinf(p)) return mag.maxCoeff();
  if (p == 1.0) return mag.sum() * cell;
  if (p == 2.0) return std::sqrt(mag.square().sum() * cell);
  return std::pow(mag.pow(p).sum() * cell, 1.0 / p);
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("smoothness order must lie in (0,1)");
}

}  // namespace

double lp_norm(const ScalarField& f, double p) { return lp_of(f.values().abs(), p, f.grid().cell_measure()); }

double lp_norm(const VectorField& f, double p) { return lp_of(f.magnitude(), p, f.grid().cell_measure()); }

double gagliardo_seminorm(const ScalarField& f, double alpha, double p) {
  check_alpha(alpha);
  if (!(p >= 1.0) || std::isinf(p)) throw DomainError("Gagliardo exponent must lie in [1, inf)");
  const Grid& g = f.grid();
  const int n = g.dim();
  const int np = g.points();
  const int w = 2 * np - 1;
  const double h = g.spacing();
  const double s = n + p * alpha;
  std::vector<double> kernel(n == 1 ? static_cast<std::size_t>(w) : static_cast<std::size_t>(w) * w, 0.0);
  for (std::size_t t = 0; t < kernel.size(); ++t) {
    const int d0 = n == 1 ? static_cast<int>(t) - (np - 1) : static_cast<int>(t / w) - (np - 1);
    const int d1 = n == 1 ? 0 : static_cast<int>(t % w) - (np - 1);
    if (d0 != 0 || d1 != 0) kernel[t] = std::pow(h * std::hypot(d0, d1), -s);
  }
  auto power = [p](double x) { return p == 1.0 ? x : p == 2.0 ? x * x : std::pow(x, p); };
  const auto& v = f.values();
  Eigen::ArrayXd rows(v.size());
  parallel_for(g.size(), [&](std::size_t idx) {
    const auto x = g.multi_index(idx);
    const double fx = v[static_cast<Eigen::Index>(idx)];
    double acc = 0.0;
    if (n == 1) {
      for (int k = 0; k < np; ++k) acc += power(std::abs(v[k] - fx)) * kernel[static_cast<std::size_t>(k - x[0] + np - 1)];
    } else {
      for (int k = 0; k < np; ++k) {
        const double* row = kernel.data() + static_cast<std::size_t>(k - x[0] + np - 1) * w + (np - 1 - x[1]);
        const double* frow = v.data() + static_cast<std::size_t>(k) * np;
        for (int l = 0; l < np; ++l) acc += power(std::abs(frow[l] - fx)) * row[l];
      }
    }
    acc *= g.cell_measure();
    if (fx != 0.0) acc += 2.0 * power(std::abs(fx)) * quadrature::exterior_integral(g, g.position(idx), s);
    rows[static_cast<Eigen::Index>(idx)] = acc;
  });
  const double total = rows.sum() * g.cell_measure();
  return p == 1.0 ? total : std::pow(total, 1.0 / p);
}

HardyNorm hardy_norm(const ScalarField& f, const BackendOptions& b) {
  HardyNorm out;
  out.riesz_l1 = lp_norm(riesz(f, b), 1.0);
  out.value = lp_norm(f, 1.0) + out.riesz_l1;
  if (out.value == 0.0) return out;
  const ScalarField wide = embed(f, f.grid().enlarged());
  out.riesz_l1_doubled = lp_norm(riesz(wide, b), 1.0);
  return out;
}

std::vector<std::array<int, 2>> besov_shifts(const Grid& g, int count) {
  const int top = std::max(1, static_cast<int>(std::floor(g.points() / 8.0 + 1e-9)));  // L/4 in cells
  std::set<int> lengths;
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    lengths.insert(static_cast<int>(std::lround(std::exp(t * std::log(static_cast<double>(top))))));
  }
  std::vector<std::array<int, 2>> shifts;
  for (int k : lengths) {
    shifts.push_back({k, 0});
    if (g.dim() == 2) {
      shifts.push_back({0, k});
      shifts.push_back({k, k});
    }
  }
  return shifts;
}

double besov_sup_seminorm(const ScalarField& f, double alpha) {
  check_alpha(alpha);
  const Grid& g = f.grid();
  const double h = g.spacing();
  double best = 0.0;
  for (const auto& y : besov_shifts(g)) {
    const double len = h * std::hypot(y[0], y[1]);
    const double diff = lp_norm(translate(f, y) - f, 1.0);
    best = std::max(best, diff / std::pow(len, alpha));
  }
  return best;
}

double frac_variation(const ScalarField& f, double alpha, const BackendOptions& b) {
  if (f.singular()) throw DomainError("fractional variation is only computed for smooth fields");
  return lp_norm(nabla(f, alpha, b), 1.0);
}

double holder_seminorm(const ScalarField& f, double alpha, const Window& window) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("Holder exponent must lie in (0,1]");
  const Grid& g = f.grid();
  std::vector<std::size_t> nodes;
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const auto x = g.position(idx);
    if (!window.half_width || (std::abs(x[0]) <= *window.half_width && std::abs(x[1]) <= *window.half_width))
      nodes.push_back(idx);
  }
  if (nodes.size() < 2) throw DomainError("Holder window holds fewer than two nodes");
  std::vector<double> best(nodes.size(), 0.0);
  parallel_for(nodes.size(), [&](std::size_t a) {
    const auto xa = g.position(nodes[a]);
    const double fa = f[nodes[a]];
    double m = 0.0;
    for (std::size_t c = a + 1; c < nodes.size(); ++c) {
      const auto xc = g.position(nodes[c]);
      const double dist = std::hypot(xa[0] - xc[0], xa[1] - xc[1]);
      m = std::max(m, std::abs(fa - f[nodes[c]]) / std::pow(dist, alpha));
    }
    best[a] = m;
  });
  return *std::max_element(best.begin(), best.end());
}

}  // namespace fraclab::norms
