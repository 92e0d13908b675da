#pragma once

#include <string>

#include "fraclab/quadrature.hpp"

namespace fraclab {

enum class Backend { spectral, quadrature };

Backend parse_backend(const std::string& name);
std::string to_string(Backend b);

/// Which engine evaluates an operator, with that engine's settings.
struct BackendOptions {
  Backend kind = Backend::spectral;
  int pad = 4;
  quadrature::QuadratureConfig quad{};
};

/// Fractional gradient of order alpha in [0,1]; the quadrature engine covers [0,1).
VectorField nabla(const ScalarField& f, double alpha, const BackendOptions& b);
VectorField riesz(const ScalarField& f, const BackendOptions& b);
ScalarField frac_laplacian(const ScalarField& f, double alpha, const BackendOptions& b);
ScalarField riesz_potential(const ScalarField& f, double alpha, const BackendOptions& b);
ScalarField divergence(const VectorField& phi, double alpha, const BackendOptions& b);

}  // namespace fraclab
