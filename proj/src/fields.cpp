#include "fraclab/fields.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "fft_nd.hpp"

namespace fraclab {

using constants::pi;

Grid::Grid(int n, double half_width, int points_per_axis) : n_(n), half_width_(half_width), points_(points_per_axis) {
  if (n != 1 && n != 2) throw DomainError("grid dimension must be 1 or 2");
  if (!(half_width > 0.0) || !std::isfinite(half_width)) throw DomainError("grid half-width must be positive");
  if (points_per_axis <= 0 || points_per_axis % 2 != 0) throw DomainError("points per axis must be a positive even integer");
}

// ---------------------------------------------------------------------------

TestFunctionSpec TestFunctionSpec::gaussian(double sigma, double amplitude) {
  TestFunctionSpec s;
  s.family = Family::gaussian;
  s.sigma = sigma;
  s.amplitude = amplitude;
  return s;
}

TestFunctionSpec TestFunctionSpec::unit_mass_gaussian(int n, double sigma) {
  return gaussian(sigma, 1.0 / std::pow(std::sqrt(pi) * sigma, n));
}

TestFunctionSpec TestFunctionSpec::gaussian_derivative(double sigma, double amplitude, int order) {
  if (order < 1) throw DomainError("derivative order must be positive");
  TestFunctionSpec s;
  s.family = Family::gaussian_derivative;
  s.sigma = sigma;
  s.amplitude = amplitude;
  s.order = order;
  return s;
}

TestFunctionSpec TestFunctionSpec::gaussian_dilated(double lambda) {
  TestFunctionSpec s;
  s.family = Family::gaussian_dilated;
  s.lambda = lambda;
  return s;
}

TestFunctionSpec TestFunctionSpec::annulus(double xi_min, double xi_max) {
  TestFunctionSpec s;
  s.family = Family::annulus_spectrum;
  s.xi_min = xi_min;
  s.xi_max = xi_max;
  return s;
}

TestFunctionSpec TestFunctionSpec::indicator(double a, double b, double smoothing) {
  TestFunctionSpec s;
  s.family = Family::indicator_interval;
  s.a = a;
  s.b = b;
  s.smoothing = smoothing;
  return s;
}

TestFunctionSpec TestFunctionSpec::cutoff(double radius) {
  TestFunctionSpec s;
  s.family = Family::cutoff_eta;
  s.radius = radius;
  return s;
}

TestFunctionSpec TestFunctionSpec::besov(double alpha) {
  TestFunctionSpec s;
  s.family = Family::besov_counterexample;
  s.alpha = alpha;
  return s;
}

TestFunctionSpec TestFunctionSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  std::map<std::string, double> params;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw DomainError("malformed field parameter '" + item + "'");
      try {
        params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw DomainError("malformed field parameter '" + item + "'");
      }
    }
  }
  auto get = [&](const char* key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  TestFunctionSpec s;
  if (name == "gaussian") {
    s = gaussian(get("sigma", 1.0), get("amplitude", 1.0));
  } else if (name == "odd-gaussian") {
    // x exp(-x^2) = -1/2 d/dx exp(-x^2)
    s = gaussian_derivative(1.0, -0.5);
  } else if (name == "gaussian-derivative" || name == "gaussian_derivative") {
    s = gaussian_derivative(get("sigma", 1.0), get("amplitude", 1.0), static_cast<int>(get("order", 1.0)));
  } else if (name == "gaussian-dilated" || name == "gaussian_dilated") {
    s = gaussian_dilated(get("lambda", 1.0));
  } else if (name == "annulus" || name == "annulus_spectrum") {
    s = annulus(get("xi_min", 0.15), get("xi_max", 0.9));
  } else if (name == "indicator" || name == "indicator_interval") {
    s = indicator(get("a", 0.0), get("b", 1.0), get("w", 0.0));
  } else if (name == "cutoff" || name == "cutoff_eta") {
    s = cutoff(get("R", 1.0));
  } else if (name == "besov" || name == "besov_counterexample") {
    s = besov(get("alpha", 0.5));
  } else {
    throw DomainError("unknown field family '" + name + "'");
  }
  return s;
}

std::string TestFunctionSpec::label() const {
  std::ostringstream os;
  os.precision(6);
  switch (family) {
    case Family::gaussian: os << "gaussian(sigma=" << sigma << ",amp=" << amplitude << ")"; break;
    case Family::gaussian_derivative:
      os << "gaussian_derivative(sigma=" << sigma << ",amp=" << amplitude;
      if (order != 1) os << ",order=" << order;
      os << ")";
      break;
    case Family::gaussian_dilated: os << "gaussian_dilated(lambda=" << lambda << ")"; break;
    case Family::annulus_spectrum: os << "annulus_spectrum(" << xi_min << "," << xi_max << ")"; break;
    case Family::indicator_interval: os << "indicator[" << a << "," << b << "](w=" << smoothing << ")"; break;
    case Family::cutoff_eta: os << "cutoff_eta(R=" << radius << ")"; break;
    case Family::besov_counterexample: os << "besov_counterexample(alpha=" << alpha << ")"; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

double eta_profile(double t) {
  const double r = std::abs(t);
  if (r <= 0.5) return 1.0;
  if (r >= 1.0) return 0.0;
  const double s = 2.0 * (r - 0.5);
  return 1.0 - s * s * (3.0 - 2.0 * s);
}

namespace {

// Cubic smoothstep edge: 1 well inside, 0 well outside, 1/2 at the edge.
double smooth_edge(double signed_distance_inside, double width) {
  if (width <= 0.0) return signed_distance_inside > 0.0 ? 1.0 : (signed_distance_inside < 0.0 ? 0.0 : 0.5);
  const double s = std::clamp(0.5 + signed_distance_inside / width, 0.0, 1.0);
  return s * s * (3.0 - 2.0 * s);
}

double interval_profile(double x, double a, double b, double w) {
  return smooth_edge(x - a, w) * smooth_edge(b - x, w);
}

// C-infinity step: 0 for t <= 0, 1 for t >= 1.
double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double p = std::exp(-1.0 / t);
  const double q = std::exp(-1.0 / (1.0 - t));
  return p / (p + q);
}

ScalarField sample_annulus(const TestFunctionSpec& spec, const Grid& grid) {
  if (!(spec.xi_min > 0.0 && spec.xi_max > spec.xi_min)) throw DomainError("annulus needs 0 < xi_min < xi_max");
  const int n = grid.dim();
  const int m = grid.points();
  const double h = grid.spacing();
  if (spec.xi_max >= 0.5 / h) throw DomainError("annulus band exceeds the grid Nyquist frequency");
  const double width = spec.xi_max - spec.xi_min;
  const double centre = 0.5 * (spec.xi_min + spec.xi_max);
  const double sigma = width / 5.0;
  const double ramp = width / 4.0;
  auto bump = [&](double rho) {
    if (rho <= spec.xi_min || rho >= spec.xi_max) return 0.0;
    const double g = std::exp(-0.5 * (rho - centre) * (rho - centre) / (sigma * sigma));
    return g * smooth_step((rho - spec.xi_min) / ramp) * smooth_step((spec.xi_max - rho) / ramp);
  };
  // Node k sits at x_0 + k h with x_0 = -L + h/2; the phase re-centres the synthesis at the origin.
  const double x0 = grid.coordinate(0);
  const double dxi = 1.0 / (m * h);
  detail::ComplexVector data(grid.size());
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const auto k = grid.multi_index(idx);
    const double xi0 = detail::signed_bin(k[0], m) * dxi;
    const double xi1 = n == 2 ? detail::signed_bin(k[1], m) * dxi : 0.0;
    const double phase = 2.0 * pi * (xi0 + xi1) * x0;
    data[idx] = bump(std::hypot(xi0, xi1)) * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  detail::fft_nd(data, n, m, true);
  ScalarField f(grid, spec.label());
  double peak = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    f[i] = data[i].real();
    peak = std::max(peak, std::abs(f[i]));
  }
  if (peak > 0.0) f.values() *= spec.amplitude / peak;
  return f;
}

}  // namespace

ScalarField sample(const TestFunctionSpec& spec, const Grid& grid) {
  const int n = grid.dim();
  if (spec.family == Family::annulus_spectrum) return sample_annulus(spec, grid);
  if (spec.family == Family::besov_counterexample) return besov_counterexample(spec.alpha, grid);
  if (spec.family == Family::cutoff_eta) return cutoff_eta(spec.radius, grid);

  if ((spec.family == Family::gaussian || spec.family == Family::gaussian_derivative) && !(spec.sigma > 0.0))
    throw DomainError("gaussian width must be positive");
  if (spec.family == Family::gaussian_dilated && !(spec.lambda > 0.0)) throw DomainError("dilation must be positive");
  if (spec.family == Family::indicator_interval && !(spec.b > spec.a && spec.smoothing >= 0.0))
    throw DomainError("indicator needs a < b and a non-negative smoothing width");

  ScalarField f(grid, spec.label());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto x = grid.position(i);
    const double r2 = x[0] * x[0] + x[1] * x[1];
    double v = 0.0;
    switch (spec.family) {
      case Family::gaussian:
        v = spec.amplitude * std::exp(-r2 / (spec.sigma * spec.sigma));
        break;
      case Family::gaussian_derivative:
        // (d/dx)^k exp(-x^2/s^2) = (-1/s)^k H_k(x/s) exp(-x^2/s^2)
        v = spec.amplitude * std::pow(-1.0 / spec.sigma, spec.order) *
            std::hermite(static_cast<unsigned>(spec.order), x[0] / spec.sigma) *
            std::exp(-r2 / (spec.sigma * spec.sigma));
        break;
      case Family::gaussian_dilated:
        v = std::pow(spec.lambda, -n) * std::exp(-r2 / (spec.lambda * spec.lambda));
        break;
      case Family::indicator_interval:
        v = spec.amplitude * interval_profile(x[0], spec.a, spec.b, spec.smoothing);
        if (n == 2) v *= interval_profile(x[1], spec.a, spec.b, spec.smoothing);
        break;
      default:
        break;
    }
    f[i] = v;
  }
  return f;
}

ScalarField cutoff_eta(double radius, const Grid& grid) {
  if (!(radius > 0.0)) throw DomainError("cutoff radius must be positive");
  ScalarField f(grid, "cutoff_eta");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto x = grid.position(i);
    f[i] = eta_profile(std::hypot(x[0], x[1]) / radius);
  }
  return f;
}

ScalarField besov_counterexample(double alpha, const Grid& grid) {
  if (grid.dim() != 2) throw DomainError("the Besov counterexample lives on 2-d grids");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
  ScalarField::Values v(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto x = grid.position(i);
    const double r = std::hypot(x[0], x[1]);
    v[static_cast<Eigen::Index>(i)] = eta_profile(r) * std::pow(r, alpha - 2.0);
  }
  std::ostringstream tag;
  tag << "besov_counterexample(alpha=" << alpha << ")";
  return ScalarField(grid, std::move(v), tag.str(), true);
}

ScalarField translate(const ScalarField& f, std::array<int, 2> shift) {
  const Grid& g = f.grid();
  const int m = g.points();
  ScalarField out(g, f.tag());
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const auto k = g.multi_index(idx);
    const int i = k[0] + shift[0];
    const int j = g.dim() == 2 ? k[1] + shift[1] : 0;
    if (i < 0 || i >= m || (g.dim() == 2 && (j < 0 || j >= m))) continue;
    out[idx] = f.at(i, j);
  }
  return out;
}

ScalarField translate(const ScalarField& f, std::array<double, 2> shift) {
  const double h = f.grid().spacing();
  std::array<int, 2> lattice{};
  for (int d = 0; d < 2; ++d) {
    const double k = shift[static_cast<std::size_t>(d)] / h;
    const double r = std::round(k);
    if (std::abs(k - r) > 1e-9 * std::max(1.0, std::abs(k))) throw DomainError("translation must be a lattice vector");
    lattice[static_cast<std::size_t>(d)] = static_cast<int>(r);
  }
  if (f.grid().dim() == 1 && lattice[1] != 0) throw DomainError("1-d field translated along a second axis");
  return translate(f, lattice);
}

ScalarField embed(const ScalarField& f, const Grid& larger) {
  const Grid& g = f.grid();
  if (larger.dim() != g.dim() || std::abs(larger.spacing() - g.spacing()) > 1e-12 * g.spacing() ||
      larger.points() < g.points() || (larger.points() - g.points()) % 2 != 0)
    throw DomainError("embedding requires a concentric grid with the same spacing");
  const int off = (larger.points() - g.points()) / 2;
  ScalarField out(larger, f.tag());
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const auto k = g.multi_index(idx);
    out[larger.flat(k[0] + off, g.dim() == 2 ? k[1] + off : 0)] = f[idx];
  }
  return out;
}

ScalarField restrict_to(const ScalarField& f, const Grid& smaller) {
  const Grid& g = f.grid();
  if (smaller.dim() != g.dim() || std::abs(smaller.spacing() - g.spacing()) > 1e-12 * g.spacing() ||
      smaller.points() > g.points() || (g.points() - smaller.points()) % 2 != 0)
    throw DomainError("restriction requires a concentric grid with the same spacing");
  const int off = (g.points() - smaller.points()) / 2;
  ScalarField out(smaller, f.tag());
  for (std::size_t idx = 0; idx < smaller.size(); ++idx) {
    const auto k = smaller.multi_index(idx);
    out[idx] = f.at(k[0] + off, g.dim() == 2 ? k[1] + off : 0);
  }
  return out;
}

double integral(const ScalarField& f) { return f.values().sum() * f.grid().cell_measure(); }

double center_value(const ScalarField& f) {
  const Grid& g = f.grid();
  const int c = g.points() / 2;
  if (g.dim() == 1) return 0.5 * (f.at(c - 1) + f.at(c));
  return 0.25 * (f.at(c - 1, c - 1) + f.at(c - 1, c) + f.at(c, c - 1) + f.at(c, c));
}

double boundary_ratio(const ScalarField& f, int band) {
  const Grid& g = f.grid();
  const double peak = f.values().abs().maxCoeff();
  if (peak == 0.0) return 0.0;
  const int m = g.points();
  double edge = 0.0;
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const auto k = g.multi_index(idx);
    bool outer = k[0] < band || k[0] >= m - band;
    if (g.dim() == 2) outer = outer || k[1] < band || k[1] >= m - band;
    if (outer) edge = std::max(edge, std::abs(f[idx]));
  }
  return edge / peak;
}

}  // namespace fraclab
