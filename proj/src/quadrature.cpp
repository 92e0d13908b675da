#include "fraclab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <map>

#include "fft_nd.hpp"
#include "fraclab/parallel.hpp"

namespace fraclab::quadrature {

using constants::pi;

// ---------------------------------------------------------------------------
// Special functions

double hurwitz_zeta(double s, double a) {
  if (s == 1.0) throw DomainError("Hurwitz zeta has a pole at s = 1");
  if (!(a > 0.0)) throw DomainError("Hurwitz zeta needs a > 0");
  constexpr int terms = 16;
  static constexpr double bernoulli[] = {1.0 / 6.0,  -1.0 / 30.0,      1.0 / 42.0, -1.0 / 30.0,
                                         5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};
  double sum = 0.0;
  for (int k = 0; k < terms; ++k) sum += std::pow(k + a, -s);
  const double x = terms + a;
  sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  // B_{2j}/(2j)! * s (s+1) ... (s+2j-2) * x^{-s-2j+1}
  double rising = s;
  double fact = 2.0;
  for (int j = 1; j <= 8; ++j) {
    sum += bernoulli[j - 1] / fact * rising * std::pow(x, -s - 2.0 * j + 1.0);
    rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  return sum;
}

double lattice_zeta(int n, double s) {
  if (n == 1) return 2.0 * hurwitz_zeta(s, 1.0);
  if (n != 2) throw DomainError("dimension must be 1 or 2");
  const double t = 0.5 * s;
  const double beta = std::pow(4.0, -t) * (hurwitz_zeta(t, 0.25) - hurwitz_zeta(t, 0.75));
  return 4.0 * hurwitz_zeta(t, 1.0) * beta;
}

double singular_lattice_constant(int n, double g) { return -lattice_zeta(n, -g); }

namespace {

struct GaussRule {
  std::vector<double> x, w;
};

GaussRule gauss_legendre(int count) {
  GaussRule r{std::vector<double>(static_cast<std::size_t>(count)), std::vector<double>(static_cast<std::size_t>(count))};
  for (int i = 0; i < count; ++i) {
    double z = std::cos(pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= count; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = count * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    r.x[static_cast<std::size_t>(i)] = z;
    r.w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return r;
}

const GaussRule& rule(int count) {
  static std::mutex lock;
  static std::map<int, GaussRule> cache;
  std::lock_guard guard(lock);
  auto it = cache.find(count);
  if (it == cache.end()) it = cache.emplace(count, gauss_legendre(count)).first;
  return it->second;
}

template <typename F>
double integrate(F&& fn, double a, double b, int count = 32) {
  const GaussRule& r = rule(count);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * fn(mid + half * r.x[i]);
  return s * half;
}

/// int_0^phi cos^a(t) dt for phi in [0, pi/2], graded towards the endpoint
/// singularity at pi/2.
double cos_power_integral(double a, double phi) {
  if (phi <= 0.0) return 0.0;
  const double delta = std::max(0.5 * pi - phi, 1e-300);
  auto fn = [a](double t) { return std::pow(std::cos(t), a); };
  double s = 0.0;
  double hi = phi;
  double width = delta;
  while (hi > 0.0) {
    const double lo = std::max(0.0, hi - width);
    s += integrate(fn, lo, hi, 12);
    hi = lo;
    width *= 2.0;
  }
  return s;
}

double signed_cos_power_integral(double a, double phi) {
  return phi >= 0.0 ? cos_power_integral(a, phi) : -cos_power_integral(a, -phi);
}

/// int over R^2 minus [-L,L]^2 of |y - x|^{-s} dy for x inside the box.
double exterior_2d(double half, double x0, double x1, double s) {
  const double a = s - 2.0;
  double total = 0.0;
  // Each side seen from x: distance d, lateral coordinate range [lo, hi].
  const double sides[4][3] = {{half - x0, -half - x1, half - x1},
                              {half + x0, -half - x1, half - x1},
                              {half - x1, -half - x0, half - x0},
                              {half + x1, -half - x0, half - x0}};
  for (const auto& sd : sides) {
    const double d = sd[0];
    const double span = signed_cos_power_integral(a, std::atan2(sd[2], d)) -
                        signed_cos_power_integral(a, std::atan2(sd[1], d));
    total += std::pow(d, -a) * span;
  }
  return total / a;
}

double exterior_1d(double half, double x, double s) {
  return (std::pow(half - x, 1.0 - s) + std::pow(half + x, 1.0 - s)) / (s - 1.0);
}

}  // namespace

double window_moment(int n, double g, double rho) {
  if (!(g > -n)) throw DomainError("window moment needs g > -n");
  if (n == 1) return 2.0 * std::pow(rho, g + 1.0) / (g + 1.0);
  const double theta = 8.0 * integrate([g](double t) { return std::pow(std::cos(t), -(g + 2.0)); }, 0.0, 0.25 * pi, 48);
  return std::pow(rho, g + 2.0) / (g + 2.0) * theta;
}

double lattice_defect(int n, double g, int m) {
  double d = 0.0;
  if (n == 1) {
    for (int k = m; k >= 1; --k) d += 2.0 * std::pow(static_cast<double>(k), g);
  } else {
    for (int i = -m; i <= m; ++i)
      for (int j = -m; j <= m; ++j)
        if (i != 0 || j != 0) d += std::pow(static_cast<double>(i * i + j * j), 0.5 * g);
  }
  return window_moment(n, g, m + 0.5) - d;
}

double exterior_integral(const Grid& grid, std::array<double, 2> x, double s, double outer_factor) {
  const int n = grid.dim();
  if (!(s > n)) throw DomainError("exterior integral needs s > n");
  if (!(outer_factor >= 1.0)) throw DomainError("tail box factor must be >= 1");
  const double half = grid.half_width();
  auto ext = [&](double l) { return n == 1 ? exterior_1d(l, x[0], s) : exterior_2d(l, x[0], x[1], s); };
  double v = ext(half);
  if (std::isfinite(outer_factor)) v -= ext(outer_factor * half);
  return v;
}

// ---------------------------------------------------------------------------
// Lattice sums

Eigen::ArrayXd lattice_correlate(const Grid& grid, const Eigen::ArrayXd& f, const std::vector<double>& table,
                                 bool direct) {
  const int n = grid.dim();
  const int np = grid.points();
  const int w = 2 * np - 1;
  const auto expected = n == 1 ? static_cast<std::size_t>(w) : static_cast<std::size_t>(w) * static_cast<std::size_t>(w);
  if (table.size() != expected) throw DomainError("kernel table size does not match grid");
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(grid.size()));

  if (direct) {
    parallel_for(grid.size(), [&](std::size_t idx) {
      const auto x = grid.multi_index(idx);
      double s = 0.0;
      if (n == 1) {
        for (int k = 0; k < np; ++k) s += f[k] * table[static_cast<std::size_t>(k - x[0] + np - 1)];
      } else {
        for (int k = 0; k < np; ++k) {
          const double* row = table.data() + static_cast<std::size_t>(k - x[0] + np - 1) * w + (np - 1 - x[1]);
          const double* frow = f.data() + static_cast<std::size_t>(k) * np;
          for (int l = 0; l < np; ++l) s += frow[l] * row[l];
        }
      }
      out[static_cast<Eigen::Index>(idx)] = s;
    });
    return out;
  }

  // Correlation with T is convolution with U(d) = T(-d); a cyclic length of
  // 2N holds every offset in [-(N-1), N-1] without overlap.
  const int m = 2 * np;
  const auto um = static_cast<std::size_t>(m);
  const std::size_t total = n == 1 ? um : um * um;
  detail::ComplexVector a(total, 0.0), u(total, 0.0);
  auto wrap = [m](int d) { return static_cast<std::size_t>((d % m + m) % m); };
  if (n == 1) {
    for (int k = 0; k < np; ++k) a[static_cast<std::size_t>(k)] = f[k];
    for (int d = -(np - 1); d <= np - 1; ++d) u[wrap(-d)] = table[static_cast<std::size_t>(d + np - 1)];
  } else {
    for (int k = 0; k < np; ++k)
      for (int l = 0; l < np; ++l)
        a[static_cast<std::size_t>(k) * um + static_cast<std::size_t>(l)] = f[static_cast<Eigen::Index>(k * np + l)];
    for (int d0 = -(np - 1); d0 <= np - 1; ++d0)
      for (int d1 = -(np - 1); d1 <= np - 1; ++d1)
        u[wrap(-d0) * um + wrap(-d1)] =
            table[static_cast<std::size_t>(d0 + np - 1) * w + static_cast<std::size_t>(d1 + np - 1)];
  }
  detail::fft_nd(a, n, m, false);
  detail::fft_nd(u, n, m, false);
  for (std::size_t p = 0; p < total; ++p) a[p] *= u[p];
  detail::fft_nd(a, n, m, true);
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const auto k = grid.multi_index(idx);
    const std::size_t p = n == 1 ? static_cast<std::size_t>(k[0]) : static_cast<std::size_t>(k[0]) * um + static_cast<std::size_t>(k[1]);
    out[static_cast<Eigen::Index>(idx)] = a[p].real();
  }
  return out;
}

namespace {

/// Field minus its far-field constant, after the admissibility checks.
struct Prepared {
  Eigen::ArrayXd values;
  double far = 0.0;
};

Prepared prepare(const ScalarField& f, const QuadratureConfig& cfg) {
  if (!f.values().allFinite()) throw DomainError("field has non-finite samples");
  if (f.singular() && cfg.clamp == QuadratureConfig::ClampPolicy::refuse)
    throw DomainError("quadrature refuses singular field " + f.tag() + " under the refuse clamp policy");
  const Grid& g = f.grid();
  const int m = g.points();
  double sum = 0.0;
  std::size_t count = 0;
  std::vector<std::size_t> band;
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const auto k = g.multi_index(idx);
    bool outer = k[0] < 2 || k[0] >= m - 2;
    if (g.dim() == 2) outer = outer || k[1] < 2 || k[1] >= m - 2;
    if (outer) {
      band.push_back(idx);
      sum += f[idx];
      ++count;
    }
  }
  double far = sum / static_cast<double>(count);
  const double peak = f.values().abs().maxCoeff();
  if (std::abs(far) <= cfg.decay_threshold * peak) far = 0.0;
  const double range = (f.values() - far).abs().maxCoeff();
  double dev = 0.0;
  for (auto idx : band) dev = std::max(dev, std::abs(f[idx] - far));
  if (range > 0.0 && dev > cfg.decay_threshold * range)
    throw DomainError("field " + f.tag() + " does not settle to a constant inside its box");
  return {f.values() - far, far};
}

struct Offset {
  double z0, z1, r;
};

/// Kernel table over lattice offsets, weighted by the cell measure, zero at
/// the origin and (when pv_epsilon > 0) inside the excluded ball.
template <typename K>
std::vector<double> make_table(const Grid& g, double exclude, K&& kernel) {
  const int np = g.points();
  const int w = 2 * np - 1;
  const double h = g.spacing();
  const double cell = g.cell_measure();
  std::vector<double> t(g.dim() == 1 ? static_cast<std::size_t>(w) : static_cast<std::size_t>(w) * w, 0.0);
  if (g.dim() == 1) {
    for (int d = -(np - 1); d <= np - 1; ++d) {
      const double z = d * h;
      const double r = std::abs(z);
      if (d != 0 && r >= exclude) t[static_cast<std::size_t>(d + np - 1)] = cell * kernel(Offset{z, 0.0, r});
    }
  } else {
    for (int d0 = -(np - 1); d0 <= np - 1; ++d0)
      for (int d1 = -(np - 1); d1 <= np - 1; ++d1) {
        const double z0 = d0 * h, z1 = d1 * h;
        const double r = std::hypot(z0, z1);
        if ((d0 != 0 || d1 != 0) && r >= exclude)
          t[static_cast<std::size_t>(d0 + np - 1) * w + static_cast<std::size_t>(d1 + np - 1)] =
              cell * kernel(Offset{z0, z1, r});
      }
  }
  return t;
}

/// Central difference along axis j with zero extension.
Eigen::ArrayXd central_difference(const Grid& g, const Eigen::ArrayXd& v, int j) {
  Eigen::ArrayXd d(v.size());
  const int np = g.points();
  const double h = g.spacing();
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    auto k = g.multi_index(idx);
    auto value = [&](int shift) {
      auto q = k;
      q[static_cast<std::size_t>(j)] += shift;
      if (q[static_cast<std::size_t>(j)] < 0 || q[static_cast<std::size_t>(j)] >= np) return 0.0;
      return v[static_cast<Eigen::Index>(g.flat(q[0], q[1]))];
    };
    d[static_cast<Eigen::Index>(idx)] = (value(1) - value(-1)) / (2.0 * h);
  }
  return d;
}

/// Five-point (three-point in 1-d) Laplacian with zero extension.
Eigen::ArrayXd discrete_laplacian(const Grid& g, const Eigen::ArrayXd& v) {
  Eigen::ArrayXd lap = Eigen::ArrayXd::Zero(v.size());
  const int np = g.points();
  const double h2 = g.spacing() * g.spacing();
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const auto k = g.multi_index(idx);
    double s = 0.0;
    for (int j = 0; j < g.dim(); ++j) {
      for (int shift : {-1, 1}) {
        auto q = k;
        q[static_cast<std::size_t>(j)] += shift;
        if (q[static_cast<std::size_t>(j)] >= 0 && q[static_cast<std::size_t>(j)] < np)
          s += v[static_cast<Eigen::Index>(g.flat(q[0], q[1]))];
      }
      s -= 2.0 * v[static_cast<Eigen::Index>(idx)];
    }
    lap[static_cast<Eigen::Index>(idx)] = s / h2;
  }
  return lap;
}

Eigen::ArrayXd exterior_field(const Grid& g, double s, double outer_factor) {
  Eigen::ArrayXd e(static_cast<Eigen::Index>(g.size()));
  parallel_for(g.size(), [&](std::size_t idx) {
    e[static_cast<Eigen::Index>(idx)] = exterior_integral(g, g.position(idx), s, outer_factor);
  });
  return e;
}

double exclusion_radius(const Grid& g, const QuadratureConfig& cfg) {
  if (!(cfg.pv_epsilon >= 0.0)) throw DomainError("pv_epsilon must be >= 0");
  return cfg.pv_epsilon * g.spacing();
}

void check_order(double alpha, double lo, double hi, const char* what) {
  if (!(alpha >= lo && alpha <= hi)) throw DomainError(std::string(what) + " order out of range");
}

/// Unnormalised odd-kernel sum plus local correction for z_j w(z) |z|^{-n-a-1},
/// where w is 1 near the origin (the correction assumes so).
VectorField odd_kernel_sum(const ScalarField& f, double alpha, const QuadratureConfig& cfg,
                           const std::function<double(double)>& window) {
  const Grid& g = f.grid();
  const int n = g.dim();
  const auto prep = prepare(f, cfg);
  const double excl = exclusion_radius(g, cfg);
  const double p = n + alpha + 1.0;
  const double corr = excl > 0.0 ? 0.0
                                 : singular_lattice_constant(n, 1.0 - n - alpha) *
                                       std::pow(g.spacing(), 1.0 - alpha) / n;
  VectorField out(g);
  for (int j = 0; j < n; ++j) {
    const auto table = make_table(g, excl, [&](Offset o) {
      return (j == 0 ? o.z0 : o.z1) * window(o.r) * std::pow(o.r, -p);
    });
    out.component(j) = lattice_correlate(g, prep.values, table);
    if (corr != 0.0) out.component(j) += corr * central_difference(g, prep.values, j);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Operators

namespace {

VectorField gradient_type(const ScalarField& f, double alpha, const QuadratureConfig& cfg) {
  VectorField out = odd_kernel_sum(f, alpha, cfg, [](double) { return 1.0; });
  out.values() *= constants::mu(f.grid().dim(), alpha);
  return out;
}

}  // namespace

VectorField quad_nabla(const ScalarField& f, double alpha, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("fractional gradient order must lie in (0,1)");
  return gradient_type(f, alpha, cfg);
}

VectorField quad_riesz(const ScalarField& f, const QuadratureConfig& cfg) { return gradient_type(f, 0.0, cfg); }

ScalarField quad_div(const VectorField& phi, double alpha, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("fractional divergence order must lie in (0,1)");
  const Grid& g = phi.grid();
  ScalarField acc(g);
  for (int j = 0; j < g.dim(); ++j) {
    const VectorField part = gradient_type(phi.component_field(j), alpha, cfg);
    acc.values() += part.component(j).array();
  }
  return acc;
}

ScalarField quad_frac_laplacian(const ScalarField& f, double alpha, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("fractional Laplacian order must lie in (0,1)");
  const Grid& g = f.grid();
  const auto prep = prepare(f, cfg);
  const int n = g.dim();
  const double excl = exclusion_radius(g, cfg);
  const auto table = make_table(g, excl, [&](Offset o) { return std::pow(o.r, -n - alpha); });
  const Eigen::ArrayXd ones = Eigen::ArrayXd::Ones(prep.values.size());
  Eigen::ArrayXd sum = lattice_correlate(g, prep.values, table) - prep.values * lattice_correlate(g, ones, table);
  sum -= prep.values * exterior_field(g, n + alpha, cfg.tail_box_factor);
  if (excl == 0.0)
    sum += 0.5 / n * singular_lattice_constant(n, 2.0 - n - alpha) * std::pow(g.spacing(), 2.0 - alpha) *
           discrete_laplacian(g, prep.values);
  return ScalarField(g, constants::nu(n, alpha) * sum);
}

ScalarField quad_riesz_potential(const ScalarField& f, double alpha, const QuadratureConfig& cfg) {
  const Grid& g = f.grid();
  const int n = g.dim();
  if (!(alpha > 0.0 && alpha < n)) throw DomainError("Riesz potential order must lie in (0,n)");
  const auto prep = prepare(f, cfg);
  if (prep.far != 0.0) throw DomainError("Riesz potential of a field with nonzero far-field value diverges");
  const double excl = exclusion_radius(g, cfg);
  const auto table = make_table(g, excl, [&](Offset o) { return std::pow(o.r, alpha - n); });
  Eigen::ArrayXd sum = lattice_correlate(g, prep.values, table);
  if (excl == 0.0) {
    const double h = g.spacing();
    sum += singular_lattice_constant(n, alpha - n) * std::pow(h, alpha) * prep.values;
    sum += 0.5 / n * singular_lattice_constant(n, alpha - n + 2.0) * std::pow(h, alpha + 2.0) *
           discrete_laplacian(g, prep.values);
  }
  return ScalarField(g, constants::riesz_potential_const(n, alpha) * sum);
}

VectorField quad_tail_op(const ScalarField& f, double beta, double radius, const QuadratureConfig& cfg) {
  check_order(beta, 0.0, 1.0, "tail operator");
  if (!(radius > 0.0)) throw DomainError("tail radius must be positive");
  const Grid& g = f.grid();
  const int n = g.dim();
  const auto prep = prepare(f, cfg);
  VectorField out(g);
  for (int j = 0; j < n; ++j) {
    const auto table = make_table(g, 0.0, [&](Offset o) {
      return (j == 0 ? o.z0 : o.z1) * (1.0 - eta_profile(o.r / radius)) * std::pow(o.r, -n - beta - 1.0);
    });
    out.component(j) = lattice_correlate(g, prep.values, table);
  }
  out.values() *= constants::mu(n, beta);
  return out;
}

VectorField quad_near_op(const ScalarField& f, double beta, double radius, const QuadratureConfig& cfg) {
  check_order(beta, 0.0, 1.0, "near operator");
  if (!(radius > 0.0)) throw DomainError("near radius must be positive");
  if (beta == 1.0) throw DomainError("near operator order must lie in [0,1)");
  VectorField out = odd_kernel_sum(f, beta, cfg, [radius](double r) { return eta_profile(r / radius); });
  out.values() *= constants::mu(f.grid().dim(), beta);
  return out;
}

namespace {

/// Lattice constant for the kinked integrand |z_1| |z|^{-n-a}, from a finite window.
double directional_defect(int n, double alpha) {
  if (n == 1) return singular_lattice_constant(1, -alpha);
  constexpr int m = 160;
  const double rho = m + 0.5;
  // Over the square window, |z_1| and |z_2| integrate alike; average them per octant.
  const double e = 4.0 * integrate(
                             [&](double t) {
                               return (std::cos(t) + std::sin(t)) * std::pow(rho / std::cos(t), 1.0 - alpha);
                             },
                             0.0, 0.25 * pi, 48) /
                   (1.0 - alpha);
  double d = 0.0;
  for (int i = -m; i <= m; ++i)
    for (int j = -m; j <= m; ++j)
      if (i != 0 || j != 0) d += std::abs(i) * std::pow(static_cast<double>(i * i + j * j), -0.5 * (2.0 + alpha));
  return e - d;
}

}  // namespace

ScalarField quad_dee_alpha(const ScalarField& f, double alpha, const QuadratureConfig& cfg) {
  check_order(alpha, 1e-12, 1.0 - 1e-12, "D^alpha");
  const Grid& g = f.grid();
  const int n = g.dim();
  const int np = g.points();
  const int w = 2 * np - 1;
  const auto prep = prepare(f, cfg);
  const Eigen::ArrayXd& v = prep.values;
  const double excl = exclusion_radius(g, cfg);
  const auto table = make_table(g, excl, [&](Offset o) { return std::pow(o.r, -n - alpha); });
  Eigen::ArrayXd out(v.size());
  parallel_for(g.size(), [&](std::size_t idx) {
    const auto x = g.multi_index(idx);
    const double fx = v[static_cast<Eigen::Index>(idx)];
    double s = 0.0;
    if (n == 1) {
      for (int k = 0; k < np; ++k) s += std::abs(v[k] - fx) * table[static_cast<std::size_t>(k - x[0] + np - 1)];
    } else {
      for (int k = 0; k < np; ++k) {
        const double* row = table.data() + static_cast<std::size_t>(k - x[0] + np - 1) * w + (np - 1 - x[1]);
        const double* frow = v.data() + static_cast<std::size_t>(k) * np;
        for (int l = 0; l < np; ++l) s += std::abs(frow[l] - fx) * row[l];
      }
    }
    out[static_cast<Eigen::Index>(idx)] = s;
  });
  out += v.abs() * exterior_field(g, n + alpha, cfg.tail_box_factor);
  if (excl == 0.0) {
    const double h = g.spacing();
    // Local term: the larger of the first-order (|grad f . z|) and the
    // second-order (Laplacian) corrections, so the triangle inequality
    // against quad_frac_laplacian survives discretisation.
    const double c1 = std::abs(directional_defect(n, alpha)) * std::pow(h, 1.0 - alpha);
    const double c2 = 0.5 / n * std::abs(singular_lattice_constant(n, 2.0 - n - alpha)) * std::pow(h, 2.0 - alpha);
    Eigen::ArrayXd grad2 = Eigen::ArrayXd::Zero(v.size());
    for (int j = 0; j < n; ++j) grad2 += central_difference(g, v, j).square();
    out += (c1 * grad2.sqrt()).max(c2 * discrete_laplacian(g, v).abs());
  }
  return ScalarField(g, out);
}

VectorField truncated_far_field(const ScalarField& f, double alpha, double eps) {
  check_order(alpha, 0.0, 1.0, "truncated far field");
  if (!(eps > 0.0)) throw DomainError("truncation radius must be positive");
  const Grid& g = f.grid();
  const int n = g.dim();
  QuadratureConfig cfg;
  const auto prep = prepare(f, cfg);
  VectorField out(g);
  for (int j = 0; j < n; ++j) {
    const auto table = make_table(g, eps, [&](Offset o) {
      return (j == 0 ? o.z0 : o.z1) * std::pow(o.r, -n - alpha - 1.0);
    });
    out.component(j) = lattice_correlate(g, prep.values, table);
  }
  return out;
}

}  // namespace fraclab::quadrature
