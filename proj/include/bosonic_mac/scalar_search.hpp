// Copyright 2026 The bosonic-mac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOSONIC_MAC_SCALAR_SEARCH_HPP
#define BOSONIC_MAC_SCALAR_SEARCH_HPP

#include <cmath>
#include <stdexcept>

namespace bmac {

struct ScalarOptimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi]. Stops
/// when the bracket is narrower than `tol`. The endpoints are also compared so
/// a monotone f returns its boundary maximum.
template <class F>
ScalarOptimum golden_section_maximize(F&& f, double lo, double hi, double tol = 1e-8,
                                      int max_iterations = 500) {
  if (!(hi >= lo)) throw std::invalid_argument("golden_section_maximize: empty bracket");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iterations && (b - a) > tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  ScalarOptimum best{0.5 * (a + b), f(0.5 * (a + b))};
  for (double x : {lo, hi}) {
    const double v = f(x);
    if (v > best.value) best = {x, v};
  }
  return best;
}

/// Bisection for a sign change of f on [lo, hi]. f(lo) and f(hi) must differ
/// in sign (zero counts as either).
template <class F>
double bisect_root(F&& f, double lo, double hi, double rel_tol = 1e-15, int max_iterations = 400) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw std::invalid_argument("bisect_root: no sign change in bracket");
  for (int i = 0; i < max_iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= rel_tol * std::abs(mid) || mid == lo || mid == hi) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace bmac

#endif  // BOSONIC_MAC_SCALAR_SEARCH_HPP
