#include "fraclab/backend.hpp"

#include "fraclab/spectral.hpp"

namespace fraclab {

Backend parse_backend(const std::string& name) {
  if (name == "spectral") return Backend::spectral;
  if (name == "quadrature") return Backend::quadrature;
  throw DomainError("unknown backend '" + name + "'");
}

std::string to_string(Backend b) { return b == Backend::spectral ? "spectral" : "quadrature"; }

VectorField nabla(const ScalarField& f, double alpha, const BackendOptions& b) {
  if (b.kind == Backend::spectral) return spectral::spectral_nabla(f, alpha, b.pad);
  if (alpha == 0.0) return quadrature::quad_riesz(f, b.quad);
  return quadrature::quad_nabla(f, alpha, b.quad);
}

VectorField riesz(const ScalarField& f, const BackendOptions& b) {
  return b.kind == Backend::spectral ? spectral::spectral_riesz(f, b.pad) : quadrature::quad_riesz(f, b.quad);
}

ScalarField frac_laplacian(const ScalarField& f, double alpha, const BackendOptions& b) {
  return b.kind == Backend::spectral ? spectral::spectral_frac_laplacian(f, alpha, b.pad)
                                     : quadrature::quad_frac_laplacian(f, alpha, b.quad);
}

ScalarField riesz_potential(const ScalarField& f, double alpha, const BackendOptions& b) {
  return b.kind == Backend::spectral ? spectral::spectral_riesz_potential(f, alpha, b.pad)
                                     : quadrature::quad_riesz_potential(f, alpha, b.quad);
}

ScalarField divergence(const VectorField& phi, double alpha, const BackendOptions& b) {
  return b.kind == Backend::spectral ? spectral::spectral_div(phi, alpha, b.pad)
                                     : quadrature::quad_div(phi, alpha, b.quad);
}

}  // namespace fraclab
