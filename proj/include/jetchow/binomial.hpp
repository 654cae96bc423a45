// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "jetchow/rational.hpp"

namespace jetchow {

// Binomial coefficient with the zero-outside-range convention:
// binomial(a, k) = 0 unless 0 <= k <= a. Negative upper arguments
// therefore yield 0, which is the convention every coefficient
// formula in this library relies on.
inline long long binomial(long long a, long long k) {
  if (k < 0 || a < 0 || k > a) return 0;
  if (k > a - k) k = a - k;
  detail::Wide result = 1;
  for (long long i = 1; i <= k; ++i) {
    result = result * (a - k + i);
    result /= i;  // exact: result is binomial(a-k+i, i) after this step
    if (result > detail::Wide(INT64_MAX)) {
      throw std::overflow_error("binomial coefficient exceeds 64-bit range");
    }
  }
  return detail::narrow(result);
}

}  // namespace jetchow
