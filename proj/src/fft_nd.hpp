#pragma once

// Internal n-d complex FFT over square arrays (row-major, M points per axis),
// built from Eigen's 1-d FFT. Forward is unnormalised; inverse divides by M^n.

#include <unsupported/Eigen/FFT>

#include <complex>
#include <vector>

namespace fraclab::detail {

using ComplexVector = std::vector<std::complex<double>>;

inline void fft_nd(ComplexVector& data, int n, int m, bool inverse) {
  Eigen::FFT<double> fft;
  ComplexVector in(static_cast<std::size_t>(m)), out(static_cast<std::size_t>(m));
  auto pass = [&](std::size_t offset, std::size_t stride) {
    for (int k = 0; k < m; ++k) in[static_cast<std::size_t>(k)] = data[offset + k * stride];
    if (inverse)
      fft.inv(out, in);
    else
      fft.fwd(out, in);
    for (int k = 0; k < m; ++k) data[offset + k * stride] = out[static_cast<std::size_t>(k)];
  };
  const auto um = static_cast<std::size_t>(m);
  if (n == 1) {
    pass(0, 1);
    return;
  }
  for (std::size_t r = 0; r < um; ++r) pass(r * um, 1);
  for (std::size_t c = 0; c < um; ++c) pass(c, um);
}

/// Signed frequency index of DFT bin k for an M-point transform.
inline int signed_bin(int k, int m) { return k < m / 2 ? k : k - m; }

}  // namespace fraclab::detail
