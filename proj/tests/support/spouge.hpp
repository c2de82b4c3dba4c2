// SPDX-License-Identifier: MIT
//
// Independent Gamma oracle for the test suite: Spouge's approximation with
// a = 33 in long double, reflection for the left half plane.  Deliberately a
// different algorithm family from the library's Stirling log-gamma so the
// two can cross-check each other.

#pragma once

#include <cmath>
#include <complex>

namespace gwhit_test {

inline std::complex<long double> spouge_gamma(std::complex<long double> z) {
  constexpr int a = 33;
  constexpr long double pil = 3.141592653589793238462643383279502884L;
  if (z.real() < 0.5L)
    return pil / (std::sin(pil * z) * spouge_gamma(1.0L - z));
  z -= 1.0L;  // Spouge approximates Gamma(z+1)
  std::complex<long double> sum = std::sqrt(2.0L * pil);
  long double fact = 1.0L;  // (k-1)!
  for (int k = 1; k < a; ++k) {
    const long double ak = static_cast<long double>(a - k);
    const long double ck =
        (k % 2 ? 1.0L : -1.0L) / fact * std::pow(ak, k - 0.5L) * std::exp(ak);
    sum += ck / (z + static_cast<long double>(k));
    fact *= k;
  }
  return std::pow(z + static_cast<long double>(a), z + 0.5L) *
         std::exp(-(z + static_cast<long double>(a))) * sum;
}

}  // namespace gwhit_test
