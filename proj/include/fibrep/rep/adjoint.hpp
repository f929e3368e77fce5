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

#ifndef FIBREP_REP_ADJOINT_HPP
#define FIBREP_REP_ADJOINT_HPP

#include <cstddef>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/linalg/matrix.hpp"

namespace fibrep {

/// Ordered basis of trace-zero n x n matrices: for n = 2, (E12, E11 - E22, E21); for n > 2,
/// the off-diagonal E_ij in row-major order followed by H_k = E_kk - E_{k+1,k+1}.
template <class T>
std::vector<Matrix<T>> sl_basis(std::size_t n, const T& like)
{
    if (n < 2) throw dimension_error("sl_basis needs n >= 2");
    const T one = one_like(like);
    std::vector<Matrix<T>> b;
    auto unit = [&](std::size_t i, std::size_t j) {
        Matrix<T> e(n, n, like);
        e(i, j) = one;
        return e;
    };
    auto h = [&](std::size_t k) { return unit(k, k) - unit(k + 1, k + 1); };
    if (n == 2) return {unit(0, 1), h(0), unit(1, 0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) b.push_back(unit(i, j));
    for (std::size_t k = 0; k + 1 < n; ++k) b.push_back(h(k));
    return b;
}

/// Coordinates of a trace-zero matrix in sl_basis order; H_k carries d_1 + ... + d_k.
template <class T>
std::vector<T> sl_coords(const Matrix<T>& x)
{
    const std::size_t n = x.rows();
    if (!x.is_square() || n < 2) throw dimension_error("sl_coords expects a square matrix of size >= 2");
    if (!is_zero(x.trace())) throw math_error("sl_coords: matrix is not trace-zero");
    if (n == 2) return {x(0, 1), x(0, 0), x(1, 0)};
    std::vector<T> c;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) c.push_back(x(i, j));
    T acc = x.zero();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        acc = acc + x(k, k);
        c.push_back(acc);
    }
    return c;
}

template <class T>
Matrix<T> sl_from_coords(const std::vector<T>& c, std::size_t n)
{
    if (c.size() != n * n - 1) throw dimension_error("sl_from_coords: wrong coordinate count");
    const auto basis = sl_basis(n, zero_like(c.front()));
    Matrix<T> x(n, n, zero_like(c.front()));
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!is_zero(c[k])) x = x + scale(c[k], basis[k]);
    return x;
}

/// Matrix of X -> g X g^-1 on sl(n) in sl_basis coordinates.
template <class T>
Matrix<T> adjoint_matrix(const Matrix<T>& g, const Matrix<T>& g_inv)
{
    const std::size_t n = g.rows();
    const auto basis = sl_basis(n, g.zero());
    Matrix<T> ad(basis.size(), basis.size(), g.zero());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto c = sl_coords(g * basis[j] * g_inv);
        for (std::size_t i = 0; i < c.size(); ++i) ad(i, j) = c[i];
    }
    return ad;
}

} // namespace fibrep

#endif
