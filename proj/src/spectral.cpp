#include "fraclab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "fft_nd.hpp"

namespace fraclab::spectral {

using constants::pi;

std::complex<double> MultiplierSpec::symbol(std::array<double, 2> xi) const {
  const double r = std::hypot(xi[0], xi[1]);
  const double s = 2.0 * pi * r;
  const std::complex<double> I(0.0, 1.0);
  if (r == 0.0) {
    switch (kind) {
      case MultiplierKind::frac_laplacian: return alpha == 0.0 ? 1.0 : 0.0;
      case MultiplierKind::bessel_ratio: return beta == 0.0 ? 1.0 / (alpha == 0.0 ? 2.0 : 1.0) : 0.0;
      case MultiplierKind::identity_plus_frac_laplacian: return alpha == 0.0 ? 2.0 : 1.0;
      default: return 0.0;
    }
  }
  const double xj = xi[static_cast<std::size_t>(component)];
  switch (kind) {
    case MultiplierKind::riesz_component: return I * (xj / r);
    case MultiplierKind::frac_laplacian: return std::pow(s, alpha);
    case MultiplierKind::riesz_potential: return std::pow(s, -alpha);
    case MultiplierKind::frac_gradient_component: return I * (xj / r) * std::pow(s, alpha);
    case MultiplierKind::bessel_ratio: return std::pow(s, beta) / (1.0 + std::pow(s, alpha));
    case MultiplierKind::identity_plus_frac_laplacian: return 1.0 + std::pow(s, alpha);
  }
  return 0.0;
}

namespace {

void check_options(const ScalarField& f, std::span<const MultiplierSpec> ms, const SpectralOptions& opt) {
  if (opt.pad != 2 && opt.pad != 4 && opt.pad != 8) throw DomainError("pad must be 2, 4 or 8");
  if (f.singular()) throw DomainError("spectral operators refuse singular fields");
  if (!f.values().allFinite()) throw DomainError("field has non-finite samples");
  if (boundary_ratio(f) > opt.tail_threshold)
    throw AliasingError("field does not decay inside its box (" + f.tag() + "); zero padding would alias");
  const int n = f.grid().dim();
  for (const auto& m : ms) {
    if (m.odd() && (m.component < 0 || m.component >= n)) throw DomainError("multiplier component out of range");
    if (m.kind == MultiplierKind::riesz_potential) {
      if (!(m.alpha > 0.0 && m.alpha < n)) throw DomainError("Riesz potential order must lie in (0,n)");
      const double l1 = f.values().abs().sum() * f.grid().cell_measure();
      if (m.alpha >= 0.5 * n && std::abs(integral(f)) > opt.mean_threshold * l1)
        throw MeanHazardError("Riesz potential of order >= n/2 applied to a field with nonzero mean");
    }
  }
}

}  // namespace

std::vector<ScalarField> apply_multipliers(const ScalarField& f, std::span<const MultiplierSpec> ms,
                                           const SpectralOptions& opt) {
  check_options(f, ms, opt);
  const Grid& g = f.grid();
  const int n = g.dim();
  const int np = g.points();
  const int m = opt.pad * np;
  const auto um = static_cast<std::size_t>(m);
  const std::size_t total = n == 1 ? um : um * um;
  const double dxi = 1.0 / (m * g.spacing());

  detail::ComplexVector spectrum(total, 0.0);
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const auto k = g.multi_index(idx);
    const std::size_t p = n == 1 ? static_cast<std::size_t>(k[0]) : static_cast<std::size_t>(k[0]) * um + static_cast<std::size_t>(k[1]);
    spectrum[p] = f[idx];
  }
  detail::fft_nd(spectrum, n, m, false);

  std::vector<ScalarField> out;
  out.reserve(ms.size());
  detail::ComplexVector work(total);
  for (const auto& mult : ms) {
    for (std::size_t p = 0; p < total; ++p) {
      const int k0 = n == 1 ? static_cast<int>(p) : static_cast<int>(p / um);
      const int k1 = n == 1 ? 0 : static_cast<int>(p % um);
      const std::array<int, 2> k{k0, k1};
      if (mult.odd() && k[static_cast<std::size_t>(mult.component)] == m / 2) {
        work[p] = 0.0;
        continue;
      }
      const std::array<double, 2> xi{detail::signed_bin(k0, m) * dxi, n == 2 ? detail::signed_bin(k1, m) * dxi : 0.0};
      work[p] = spectrum[p] * mult.symbol(xi);
    }
    detail::fft_nd(work, n, m, true);
    ScalarField r(g);
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
      const auto k = g.multi_index(idx);
      const std::size_t p = n == 1 ? static_cast<std::size_t>(k[0]) : static_cast<std::size_t>(k[0]) * um + static_cast<std::size_t>(k[1]);
      r[idx] = work[p].real();
    }
    out.push_back(std::move(r));
  }
  return out;
}

ScalarField apply_multiplier(const ScalarField& f, const MultiplierSpec& m, const SpectralOptions& opt) {
  return std::move(apply_multipliers(f, std::span<const MultiplierSpec>(&m, 1), opt).front());
}

ScalarField apply_multiplier(const ScalarField& f, const MultiplierSpec& m, int pad) {
  SpectralOptions opt;
  opt.pad = pad;
  return apply_multiplier(f, m, opt);
}

VectorField spectral_nabla(const ScalarField& f, double alpha, int pad) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("fractional gradient order must lie in [0,1]");
  const int n = f.grid().dim();
  std::vector<MultiplierSpec> ms;
  for (int j = 0; j < n; ++j) ms.push_back(MultiplierSpec::frac_gradient(alpha, j));
  SpectralOptions opt;
  opt.pad = pad;
  auto comps = apply_multipliers(f, ms, opt);
  VectorField v(f.grid());
  for (int j = 0; j < n; ++j) v.set_component(j, comps[static_cast<std::size_t>(j)]);
  return v;
}

VectorField spectral_riesz(const ScalarField& f, int pad) {
  const int n = f.grid().dim();
  std::vector<MultiplierSpec> ms;
  for (int j = 0; j < n; ++j) ms.push_back(MultiplierSpec::riesz(j));
  SpectralOptions opt;
  opt.pad = pad;
  auto comps = apply_multipliers(f, ms, opt);
  VectorField v(f.grid());
  for (int j = 0; j < n; ++j) v.set_component(j, comps[static_cast<std::size_t>(j)]);
  return v;
}

ScalarField spectral_div(const VectorField& phi, double alpha, int pad) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("fractional divergence order must lie in [0,1]");
  ScalarField acc(phi.grid());
  for (int j = 0; j < phi.dim(); ++j)
    acc.values() += apply_multiplier(phi.component_field(j), MultiplierSpec::frac_gradient(alpha, j), pad).values();
  return acc;
}

ScalarField spectral_frac_laplacian(const ScalarField& f, double alpha, int pad) {
  return apply_multiplier(f, MultiplierSpec::frac_laplacian(alpha), pad);
}

ScalarField spectral_riesz_potential(const ScalarField& f, double alpha, int pad) {
  return apply_multiplier(f, MultiplierSpec::riesz_potential(alpha), pad);
}

double mihlin_symbol(double alpha, double beta, double r) {
  return std::pow(r, beta) / (1.0 + std::pow(r, alpha));
}

double mihlin_norm_estimate(int n, double alpha, double beta, std::span<const double> xi_grid, double fd_step) {
  if (n != 1 && n != 2) throw DomainError("dimension must be 1 or 2");
  if (!(0.0 <= beta && beta <= alpha && alpha <= 1.0)) throw DomainError("need 0 <= beta <= alpha <= 1");
  if (!(fd_step > 0.0 && fd_step < 0.5)) throw DomainError("fd_step must lie in (0, 1/2)");
  auto m = [&](double x0, double x1) { return mihlin_symbol(alpha, beta, std::hypot(x0, x1)); };
  double best = 0.0;
  if (n == 1) {
    for (double r : xi_grid) {
      const double d = fd_step * r;
      const double deriv = (m(r + d, 0.0) - m(r - d, 0.0)) / (2.0 * d);
      best = std::max({best, std::abs(m(r, 0.0)), std::abs(r * deriv)});
    }
    return best;
  }
  // floor(2/2) + 1 = 2: all multi-indices of order <= 2. m is radial, so a
  // quarter turn of directions covers every sign pattern of xi^a d^a m.
  constexpr int directions = 24;
  for (double r : xi_grid) {
    const double d = fd_step * r;
    for (int t = 0; t <= directions; ++t) {
      const double th = 0.5 * pi * t / directions;
      const double x0 = r * std::cos(th), x1 = r * std::sin(th);
      const double m0 = m(x0, x1);
      const double d0 = (m(x0 + d, x1) - m(x0 - d, x1)) / (2.0 * d);
      const double d1 = (m(x0, x1 + d) - m(x0, x1 - d)) / (2.0 * d);
      const double d00 = (m(x0 + d, x1) - 2.0 * m0 + m(x0 - d, x1)) / (d * d);
      const double d11 = (m(x0, x1 + d) - 2.0 * m0 + m(x0, x1 - d)) / (d * d);
      const double d01 = (m(x0 + d, x1 + d) - m(x0 + d, x1 - d) - m(x0 - d, x1 + d) + m(x0 - d, x1 - d)) / (4.0 * d * d);
      best = std::max({best, std::abs(m0), std::abs(x0 * d0), std::abs(x1 * d1), std::abs(x0 * x0 * d00),
                       std::abs(x1 * x1 * d11), std::abs(x0 * x1 * d01)});
    }
  }
  return best;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi > lo) || count < 2) throw DomainError("log_spaced needs 0 < lo < hi and count >= 2");
  std::vector<double> v(static_cast<std::size_t>(count));
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (count - 1));
  return v;
}

}  // namespace fraclab::spectral
