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

#ifndef FIBREP_LINALG_CHARPOLY_HPP
#define FIBREP_LINALG_CHARPOLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "fibrep/linalg/matrix.hpp"
#include "fibrep/numfield/polynomial.hpp"

namespace fibrep {

/// det(x I - A), via reduction to upper Hessenberg form.
template <class T>
Polynomial<T> char_poly(Matrix<T> a)
{
    if (!a.is_square()) throw dimension_error("char_poly of a non-square matrix");
    const std::size_t n = a.rows();
    const T zero = a.zero();
    for (std::size_t c = 0; c + 2 <= n; ++c) {
        std::size_t p = c + 1;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) continue;
        if (p != c + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, c + 1));
        }
        const T inv = inverse(a(c + 1, c));
        for (std::size_t i = c + 2; i < n; ++i) {
            if (is_zero(a(i, c))) continue;
            const T f = a(i, c) * inv;
            for (std::size_t j = 0; j < n; ++j) a(i, j) = a(i, j) - f * a(c + 1, j);
            for (std::size_t r = 0; r < n; ++r) a(r, c + 1) = a(r, c + 1) + f * a(r, i);
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
    std::vector<Polynomial<T>> p;
    p.push_back(Polynomial<T>::constant(one_like(zero)));
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial<T> next = Polynomial<T>::linear_root(a(k, k)) * p[k];
        T prod = one_like(zero);
        for (std::size_t i = k; i-- > 0;) {
            prod = prod * a(i + 1, i);
            if (is_zero(prod)) break;
            next = next - (prod * a(i, k)) * p[i];
        }
        p.push_back(std::move(next));
    }
    return p.back();
}

/// Largest e with q^e dividing p (q nonconstant, p nonzero).
template <class T>
unsigned multiplicity(Polynomial<T> p, const Polynomial<T>& q)
{
    if (q.degree() < 1) throw math_error("multiplicity: divisor must be nonconstant");
    if (p.is_zero_poly()) throw math_error("multiplicity in the zero polynomial");
    unsigned e = 0;
    for (;;) {
        auto d = divmod(p, q);
        if (!d.remainder.is_zero_poly()) return e;
        p = d.quotient;
        ++e;
    }
}

/// Every root of q is a simple root of p: q | p and q^2 does not divide p.
template <class T>
bool simple_factor_check(const Polynomial<T>& p, const Polynomial<T>& q)
{
    if (!q.is_monic()) throw math_error("simple_factor_check: q must be monic");
    return multiplicity(p, q) == 1;
}

} // namespace fibrep

#endif
