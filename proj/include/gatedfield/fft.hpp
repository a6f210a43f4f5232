#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace gatedfield {

// In-place 3-D complex DFT, unnormalized. sign = -1 is the forward transform
// (e^{-ik.r} convention), sign = +1 the inverse (caller divides by N).
// Layout is x-fastest: idx = ix + nx*(iy + ny*iz).
// Backed by FFTW with FFTW_ESTIMATE plans, which are chosen deterministically,
// so identical input produces bitwise-identical output.
void dft3(std::vector<std::complex<double>>& data,
          const std::array<std::int64_t, 3>& dims, int sign);

// Integer frequency index for slot i of an n-point DFT: 0,1,...,n/2,-(n-1)/2,...,-1.
inline std::int64_t dft_frequency(std::int64_t i, std::int64_t n) {
    return (i <= (n - 1) / 2) ? i : i - n;
}

} // namespace gatedfield
