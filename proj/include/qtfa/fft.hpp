#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qtfa/grid.hpp"

namespace qtfa {

/// In-place radix-2 complex transform, unnormalized:
///   sign = -1:  X_m = sum_k x_k e^{-2pi i k m / n}
///   sign = +1:  X_m = sum_k x_k e^{+2pi i k m / n}
/// n must be a power of two. Twiddles come from a single per-call root table,
/// so no error accumulates across stages.
inline void fft_pow2(std::complex<double>* a, std::size_t n, int sign) {
  if (!is_power_of_two(static_cast<int>(n)))
    throw std::invalid_argument("fft_pow2: length must be a power of two");
  if (n == 1) return;

  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  std::vector<std::complex<double>> root(n / 2);
  for (std::size_t r = 0; r < n / 2; ++r) {
    const double ang = sign * kTwoPi * static_cast<double>(r) / static_cast<double>(n);
    root[r] = {std::cos(ang), std::sin(ang)};
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> w = root[k * stride];
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

/// Separable transform over `axes` dimensions of equal length n, row-major
/// layout (last axis fastest). Each axis pass gathers one line into a scratch
/// buffer, transforms it, and scatters it back.
inline void fft_nd(std::complex<double>* data, int axes, std::size_t n, int sign) {
  const std::size_t total = pow_index(n, axes);
  std::vector<std::complex<double>> line(n);
  std::size_t stride = 1;
  for (int axis = axes - 1; axis >= 0; --axis) {
    const std::size_t block = stride * n;
    for (std::size_t base = 0; base < total; base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        std::complex<double>* p = data + base + off;
        for (std::size_t k = 0; k < n; ++k) line[k] = p[k * stride];
        fft_pow2(line.data(), n, sign);
        for (std::size_t k = 0; k < n; ++k) p[k * stride] = line[k];
      }
    }
    stride *= n;
  }
}

}  // namespace qtfa
