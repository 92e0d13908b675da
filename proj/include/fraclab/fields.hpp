#pragma once

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "fraclab/constants.hpp"

namespace fraclab {

/// Uniform cell-centred lattice over the box [-L, L]^n, n in {1, 2}.
///
/// Nodes sit at x_k = -L + (k + 1/2) h with h = 2L/N and N even, so no node
/// coincides with the origin and every singular kernel centred at a node is
/// only ever evaluated at nonzero offsets. Flat indices are row-major with
/// axis 0 slowest.
class Grid {
 public:
  Grid(int n, double half_width, int points_per_axis);

  int dim() const { return n_; }
  double half_width() const { return half_width_; }
  int points() const { return points_; }
  double spacing() const { return 2.0 * half_width_ / points_; }
  double cell_measure() const { return n_ == 1 ? spacing() : spacing() * spacing(); }
  std::size_t size() const {
    return n_ == 1 ? static_cast<std::size_t>(points_)
                   : static_cast<std::size_t>(points_) * static_cast<std::size_t>(points_);
  }

  double coordinate(int k) const { return -half_width_ + (k + 0.5) * spacing(); }
  std::array<int, 2> multi_index(std::size_t flat) const {
    if (n_ == 1) return {static_cast<int>(flat), 0};
    return {static_cast<int>(flat / points_), static_cast<int>(flat % points_)};
  }
  std::size_t flat(int i, int j = 0) const {
    return n_ == 1 ? static_cast<std::size_t>(i)
                   : static_cast<std::size_t>(i) * points_ + static_cast<std::size_t>(j);
  }
  /// Position of a node; the second entry is 0 on 1-d grids.
  std::array<double, 2> position(std::size_t flat) const {
    const auto idx = multi_index(flat);
    return {coordinate(idx[0]), n_ == 2 ? coordinate(idx[1]) : 0.0};
  }

  /// Same box, twice the points per axis.
  Grid refined() const { return Grid(n_, half_width_, 2 * points_); }
  /// Same spacing, box twice as wide.
  Grid enlarged() const { return Grid(n_, 2.0 * half_width_, 2 * points_); }

  bool operator==(const Grid& o) const {
    return n_ == o.n_ && half_width_ == o.half_width_ && points_ == o.points_;
  }

 private:
  int n_;
  double half_width_;
  int points_;
};

template <typename Scalar>
class ScalarFieldT {
 public:
  using Values = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  explicit ScalarFieldT(Grid grid, std::string tag = "computed")
      : grid_(grid), values_(Values::Zero(static_cast<Eigen::Index>(grid.size()))), tag_(std::move(tag)) {}
  ScalarFieldT(Grid grid, Values values, std::string tag = "computed", bool singular = false)
      : grid_(grid), values_(std::move(values)), tag_(std::move(tag)), singular_(singular) {
    if (static_cast<std::size_t>(values_.size()) != grid_.size())
      throw DomainError("field size does not match grid");
  }

  const Grid& grid() const { return grid_; }
  const Values& values() const { return values_; }
  Values& values() { return values_; }
  Scalar operator[](std::size_t i) const { return values_[static_cast<Eigen::Index>(i)]; }
  Scalar& operator[](std::size_t i) { return values_[static_cast<Eigen::Index>(i)]; }
  Scalar at(int i, int j = 0) const { return values_[static_cast<Eigen::Index>(grid_.flat(i, j))]; }

  const std::string& tag() const { return tag_; }
  void set_tag(std::string t) { tag_ = std::move(t); }
  /// Marks fields with a deliberate point singularity (clamped at the nearest cell).
  bool singular() const { return singular_; }

 private:
  Grid grid_;
  Values values_;
  std::string tag_;
  bool singular_ = false;
};

/// n scalar components on one grid, stored column-wise.
template <typename Scalar>
class VectorFieldT {
 public:
  using Values = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  explicit VectorFieldT(Grid grid)
      : grid_(grid), values_(Values::Zero(static_cast<Eigen::Index>(grid.size()), grid.dim())) {}

  const Grid& grid() const { return grid_; }
  int dim() const { return grid_.dim(); }
  auto component(int j) { return values_.col(j); }
  auto component(int j) const { return values_.col(j); }
  ScalarFieldT<Scalar> component_field(int j) const {
    return ScalarFieldT<Scalar>(grid_, values_.col(j), "computed");
  }
  void set_component(int j, const ScalarFieldT<Scalar>& f) {
    if (!(f.grid() == grid_)) throw DomainError("component grid mismatch");
    values_.col(j) = f.values();
  }
  const Values& values() const { return values_; }
  Values& values() { return values_; }
  /// Pointwise Euclidean magnitude.
  Eigen::Array<Scalar, Eigen::Dynamic, 1> magnitude() const { return values_.rowwise().norm(); }

 private:
  Grid grid_;
  Values values_;
};

using ScalarField = ScalarFieldT<double>;
using VectorField = VectorFieldT<double>;

inline ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  if (!(a.grid() == b.grid())) throw DomainError("grid mismatch");
  return ScalarField(a.grid(), a.values() - b.values());
}
inline ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  if (!(a.grid() == b.grid())) throw DomainError("grid mismatch");
  return ScalarField(a.grid(), a.values() + b.values());
}
inline ScalarField operator*(double c, const ScalarField& a) { return ScalarField(a.grid(), c * a.values(), a.tag()); }
inline VectorField operator-(const VectorField& a, const VectorField& b) {
  if (!(a.grid() == b.grid())) throw DomainError("grid mismatch");
  VectorField r(a.grid());
  r.values() = a.values() - b.values();
  return r;
}

// ---------------------------------------------------------------------------
// Analytic test functions

enum class Family {
  gaussian,             ///< amplitude * exp(-|x|^2 / sigma^2)
  gaussian_derivative,  ///< amplitude * (d/dx_1)^order exp(-|x|^2 / sigma^2); moments below `order` vanish
  gaussian_dilated,     ///< lambda^{-n} exp(-|x|^2 / lambda^2); mass pi^{n/2} for every lambda
  annulus_spectrum,     ///< band-limited, spectrum inside xi_min <= |xi| <= xi_max; all moments vanish
  indicator_interval,   ///< indicator of [a,b] (or [a,b]^2), optionally with smoothstep edges
  cutoff_eta,           ///< eta(|x| / radius)
  besov_counterexample  ///< eta_1(x) |x|^{alpha - n}, n = 2
};

struct TestFunctionSpec {
  Family family = Family::gaussian;
  double amplitude = 1.0;
  double sigma = 1.0;
  double lambda = 1.0;
  double a = 0.0;
  double b = 1.0;
  double smoothing = 0.0;  ///< full ramp width at each indicator edge
  double radius = 1.0;
  double alpha = 0.5;
  double xi_min = 0.15;
  double xi_max = 0.9;
  int order = 1;

  static TestFunctionSpec gaussian(double sigma = 1.0, double amplitude = 1.0);
  /// Gaussian of width sigma normalised to unit mass on R^n.
  static TestFunctionSpec unit_mass_gaussian(int n, double sigma = 1.0);
  static TestFunctionSpec gaussian_derivative(double sigma = 1.0, double amplitude = 1.0, int order = 1);
  static TestFunctionSpec gaussian_dilated(double lambda);
  static TestFunctionSpec annulus(double xi_min = 0.15, double xi_max = 0.9);
  static TestFunctionSpec indicator(double a, double b, double smoothing = 0.0);
  static TestFunctionSpec cutoff(double radius);
  static TestFunctionSpec besov(double alpha);

  /// Parses CLI field descriptors such as "gaussian", "odd-gaussian",
  /// "gaussian-derivative:sigma=0.5", "indicator:a=0,b=1,w=0.2".
  static TestFunctionSpec parse(const std::string& text);
  std::string label() const;
};

/// The cubic smoothstep cutoff profile: 1 on [-1/2,1/2], 0 outside [-1,1], Lip = 3.
double eta_profile(double t);

ScalarField sample(const TestFunctionSpec& spec, const Grid& grid);
ScalarField cutoff_eta(double radius, const Grid& grid);
ScalarField besov_counterexample(double alpha, const Grid& grid);

/// f(. + shift h) with zero fill; shift in lattice units per axis.
ScalarField translate(const ScalarField& f, std::array<int, 2> shift);
/// Real-valued shift; must be an integer multiple of h per axis.
ScalarField translate(const ScalarField& f, std::array<double, 2> shift);

/// Same samples placed in a larger grid with the same spacing (zero outside).
ScalarField embed(const ScalarField& f, const Grid& larger);
/// Restriction of f to a smaller concentric grid with the same spacing.
ScalarField restrict_to(const ScalarField& f, const Grid& smaller);

/// Midpoint-rule integral.
double integral(const ScalarField& f);
/// Average of the 2^n nodes adjacent to the origin.
double center_value(const ScalarField& f);
/// max |f| over the outer `band` layers of nodes divided by max |f| (0 for the zero field).
double boundary_ratio(const ScalarField& f, int band = 2);

}  // namespace fraclab
