/* Copyright 2026 The fibrep Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef FIBREP_DEFORM_BN1_HPP
#define FIBREP_DEFORM_BN1_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/numfield/jet.hpp"

namespace fibrep {

template <class T>
struct Bn1Report {
    Jet<T> b;                    // (-c(t))^{n-1}
    std::vector<T> derivatives;  // b^{(k)}(0) = k! b_k
    std::optional<std::size_t> first_nonvanishing;
    bool pattern_holds = false;  // first nonvanishing derivative has order exactly n-1
};

/// Lower-left entry of r_n along a path whose SL(2) lower-left entry is c(t), c(0) = 0.
/// The coefficients of c are taken as an exact polynomial.
template <class T>
Bn1Report<T> bn1_jet_check(const Jet<T>& c, std::size_t n)
{
    if (n < 2) throw dimension_error("bn1_jet_check needs n >= 2");
    if (!is_zero(c.constant_term())) throw math_error("bn1_jet_check: path must start at c(0) = 0");
    const std::size_t m = c.order(), big = (n - 1) * (m - 1) + 1;
    std::vector<T> coeffs(big, zero_like(c.constant_term()));
    for (std::size_t k = 0; k < m; ++k) coeffs[k] = -c[k];
    Bn1Report<T> r;
    r.b = Jet<T>(coeffs).pow(static_cast<unsigned>(n - 1));
    Rational fact = 1;
    for (std::size_t k = 0; k < big; ++k) {
        if (k > 0) fact *= Rational(static_cast<long>(k));
        r.derivatives.push_back(r.b[k] * fact);
        if (!r.first_nonvanishing && !is_zero(r.b[k])) r.first_nonvanishing = k;
    }
    r.pattern_holds = r.first_nonvanishing && *r.first_nonvanishing == n - 1;
    return r;
}

} // namespace fibrep

#endif
