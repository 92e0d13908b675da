#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "fraclab/backend.hpp"

namespace fraclab::norms {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// (sum |f|^p h^n)^{1/p}; p = infinity gives the max norm. Vector fields use
/// the pointwise Euclidean magnitude.
double lp_norm(const ScalarField& f, double p);
double lp_norm(const VectorField& f, double p);

/// Gagliardo W^{alpha,p} seminorm to the power 1 when p = 1, and the p-th
/// root of the double sum otherwise. Node pairs x != y are summed with
/// weight h^{2n}; pairs with one point outside the box are added in closed
/// form (f is taken as zero there), which matters when alpha is small and
/// the kernel reaches far beyond the box.
double gagliardo_seminorm(const ScalarField& f, double alpha, double p);

struct HardyNorm {
  double value = 0.0;            ///< ||f||_1 + ||R f||_1 on the given box
  double riesz_l1 = 0.0;         ///< ||R f||_1 on the given box
  double riesz_l1_doubled = 0.0; ///< ||R f||_1 after embedding f in a box twice as wide
  /// Relative growth of ||R f||_1 under box doubling; large for nonzero-mean fields.
  double growth() const { return riesz_l1 == 0.0 ? 0.0 : riesz_l1_doubled / riesz_l1 - 1.0; }
};

HardyNorm hardy_norm(const ScalarField& f, const BackendOptions& b);

/// Lattice shifts used by the Besov seminorm: log-spaced lengths from h to
/// L/4 along each axis (and the diagonal in 2-d), deduplicated.
std::vector<std::array<int, 2>> besov_shifts(const Grid& g, int count = 24);

/// max over besov_shifts of ||f(. + y) - f||_1 / |y|^alpha.
double besov_sup_seminorm(const ScalarField& f, double alpha);

/// ||nabla^alpha f||_1, refused for singular fields.
double frac_variation(const ScalarField& f, double alpha, const BackendOptions& b);

/// Coordinate window |x_i| <= half_width; nullopt means the whole box.
struct Window {
  std::optional<double> half_width;
};

/// max over node pairs in the window of |f(x) - f(y)| / |x - y|^alpha.
double holder_seminorm(const ScalarField& f, double alpha, const Window& window = {});

}  // namespace fraclab::norms
