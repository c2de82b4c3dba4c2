// SPDX-License-Identifier: MIT
//
// Rising factorial (a)_k for integer k of either sign.
//
//   (a)_k  = a (a+1) ... (a+k-1)            k >= 0,   (a)_0 = 1
//   (a)_-n = 1 / ((a-1)(a-2) ... (a-n))     n > 0
//
// The negative-index convention is the analytic continuation
// Gamma(a+k)/Gamma(a); it satisfies (a)_{-n} (a-n)_n = 1.  A zero factor in
// the reciprocal product means Gamma(a+k)/Gamma(a) has a pole there, which
// is reported as a numeric_error rather than returning an infinity.

#pragma once

#include "gwhit/common.hpp"

namespace gwhit {

inline cplx pochhammer(cplx a, long k) {
  cplx p{1.0, 0.0};
  if (k >= 0) {
    for (long j = 0; j < k; ++j) p *= a + cplx(static_cast<double>(j), 0.0);
    return p;
  }
  for (long j = 1; j <= -k; ++j) p *= a - cplx(static_cast<double>(j), 0.0);
  if (p == cplx(0.0, 0.0))
    throw numeric_error("pochhammer: pole in negative-index rising factorial");
  return cplx(1.0, 0.0) / p;
}

}  // namespace gwhit
