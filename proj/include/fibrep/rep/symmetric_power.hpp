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

#ifndef FIBREP_REP_SYMMETRIC_POWER_HPP
#define FIBREP_REP_SYMMETRIC_POWER_HPP

#include <cstddef>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/linalg/matrix.hpp"
#include "fibrep/numfield/polynomial.hpp"

namespace fibrep {

/// Action of M = [[a,b],[c,d]] on homogeneous polynomials of degree n-1 in the basis
/// e_l = X^{l-1} Y^{n-l}: column l expands (dX - bY)^{l-1} (-cX + aY)^{n-l}.
template <class T>
Matrix<T> r_n(const Matrix<T>& m, std::size_t n)
{
    if (m.rows() != 2 || m.cols() != 2) throw dimension_error("r_n expects a 2x2 matrix");
    if (n < 1) throw dimension_error("r_n needs n >= 1");
    const T &a = m(0, 0), &b = m(0, 1), &c = m(1, 0), &d = m(1, 1);
    const T one = one_like(m.zero());
    if (!is_zero(a * d - b * c - one)) throw math_error("r_n: determinant is not 1");
    // polynomials in X with Y = 1; homogeneity fixes the Y power
    const Polynomial<T> x_img(std::vector<T>{-b, d}, m.zero());
    const Polynomial<T> y_img(std::vector<T>{a, -c}, m.zero());
    Matrix<T> out(n, n, m.zero());
    for (std::size_t l = 1; l <= n; ++l) {
        const auto col = x_img.pow(static_cast<unsigned>(l - 1)) * y_img.pow(static_cast<unsigned>(n - l));
        for (std::size_t k = 1; k <= n; ++k) out(k - 1, l - 1) = col.coeff(k - 1);
    }
    return out;
}

} // namespace fibrep

#endif
