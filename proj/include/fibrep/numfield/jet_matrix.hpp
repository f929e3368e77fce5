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

#ifndef FIBREP_NUMFIELD_JET_MATRIX_HPP
#define FIBREP_NUMFIELD_JET_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/linalg/matrix.hpp"
#include "fibrep/numfield/jet.hpp"

namespace fibrep {

template <class T>
using JetMatrix = Matrix<Jet<T>>;

/// sum_k t^k parts[k], truncated at t^{parts.size()}.
template <class T>
JetMatrix<T> jet_matrix_from_coefficients(const std::vector<Matrix<T>>& parts)
{
    if (parts.empty()) throw math_error("jet matrix needs at least one coefficient");
    const auto& a = parts.front();
    const std::size_t m = parts.size();
    JetMatrix<T> out(a.rows(), a.cols(), Jet<T>(m, a.zero()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::vector<T> c;
            for (const auto& p : parts) {
                if (p.rows() != a.rows() || p.cols() != a.cols()) throw dimension_error("jet matrix coefficients differ in shape");
                c.push_back(p(i, j));
            }
            out(i, j) = Jet<T>(std::move(c));
        }
    return out;
}

template <class T>
JetMatrix<T> lift_constant(const Matrix<T>& a, std::size_t order)
{
    std::vector<Matrix<T>> parts(order, Matrix<T>(a.rows(), a.cols(), a.zero()));
    parts[0] = a;
    return jet_matrix_from_coefficients(parts);
}

/// The t^k coefficient matrix.
template <class T>
Matrix<T> jet_coefficient(const JetMatrix<T>& a, std::size_t k)
{
    Matrix<T> out(a.rows(), a.cols(), a.zero().constant_term());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j)[k];
    return out;
}

template <class T>
std::size_t jet_order(const JetMatrix<T>& a)
{
    return a.zero().order();
}

/// exp of a jet matrix with vanishing constant term; the series stops at t^{m-1}.
template <class T>
JetMatrix<T> jet_exp(const JetMatrix<T>& x)
{
    if (!x.is_square()) throw dimension_error("jet_exp of a non-square matrix");
    if (!jet_coefficient(x, 0).is_zero()) throw math_error("jet_exp: constant term must vanish");
    const std::size_t m = jet_order(x);
    JetMatrix<T> term = JetMatrix<T>::identity(x.rows(), x.zero());
    JetMatrix<T> sum = term;
    for (std::size_t k = 1; k < m; ++k) {
        term = scale(Rational(1, static_cast<long>(k)), term * x);
        sum = sum + term;
    }
    return sum;
}

/// log of a jet matrix whose constant term is the identity.
template <class T>
JetMatrix<T> jet_log(const JetMatrix<T>& y)
{
    if (!y.is_square()) throw dimension_error("jet_log of a non-square matrix");
    const auto id = JetMatrix<T>::identity(y.rows(), y.zero());
    const auto n = y - id;
    if (!jet_coefficient(n, 0).is_zero()) throw math_error("jet_log: constant term must be the identity");
    const std::size_t m = jet_order(y);
    JetMatrix<T> power = n;
    JetMatrix<T> sum(y.rows(), y.cols(), y.zero());
    for (std::size_t k = 1; k < m; ++k) {
        sum = sum + scale(Rational((k % 2) ? 1 : -1, static_cast<long>(k)), power);
        power = power * n;
    }
    return sum;
}

} // namespace fibrep

#endif
