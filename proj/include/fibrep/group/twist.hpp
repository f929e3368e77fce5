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

#ifndef FIBREP_GROUP_TWIST_HPP
#define FIBREP_GROUP_TWIST_HPP

#include <cstddef>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/linalg/matrix.hpp"
#include "fibrep/numfield/rational.hpp"

namespace fibrep {

/// Intersection form on (alpha_1, beta_1, ..., alpha_g, beta_g) with <alpha_i, beta_i> = 1.
inline Matrix<Rational> standard_omega(int genus)
{
    const std::size_t n = static_cast<std::size_t>(2 * genus);
    Matrix<Rational> w(n, n, Rational(0));
    for (std::size_t i = 0; i < n; i += 2) {
        w(i, i + 1) = 1;
        w(i + 1, i) = -1;
    }
    return w;
}

/// x -> x + sign <x, c> c, i.e. I + sign c (omega c)^T. Sign +1 is the left twist.
inline Matrix<Rational> dehn_twist_transvection(const std::vector<Rational>& c, int sign, const Matrix<Rational>& omega)
{
    if (sign != 1 && sign != -1) throw math_error("twist sign must be +1 or -1");
    if (c.size() != omega.rows() || !omega.is_square()) throw dimension_error("twist: class and form sizes differ");
    bool nonzero = false;
    for (const auto& x : c) nonzero = nonzero || !is_zero(x);
    if (!nonzero) throw math_error("twist along the zero class");
    const std::size_t n = c.size();
    const auto wc = omega.apply(c);
    Matrix<Rational> t = Matrix<Rational>::identity(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) += Rational(sign) * c[i] * wc[j];
    return t;
}

struct TwistStep {
    std::vector<Rational> curve;
    int sign = 1;
};

/// H_1 action of the twists applied in order (first step acts first).
inline Matrix<Rational> twist_product(int genus, const std::vector<TwistStep>& steps)
{
    const auto omega = standard_omega(genus);
    Matrix<Rational> h = Matrix<Rational>::identity(omega.rows(), Rational(0));
    for (const auto& s : steps) h = dehn_twist_transvection(s.curve, s.sign, omega) * h;
    return h;
}

/// H^1 action on the redundant basis: [[H^T, 0], [0, P]] with P_{j, perm[j]} = 1.
inline Matrix<Rational> homology_monodromy(int genus, const std::vector<TwistStep>& steps,
                                           const std::vector<std::size_t>& perm)
{
    const std::size_t b = static_cast<std::size_t>(2 * genus), p = perm.size();
    Matrix<Rational> m(b + p, b + p, Rational(0));
    if (b > 0) m.set_block(0, 0, twist_product(genus, steps).transpose());
    for (std::size_t j = 0; j < p; ++j) {
        if (perm[j] >= p) throw dimension_error("homology_monodromy: bad permutation");
        m(b + j, b + perm[j]) = 1;
    }
    return m;
}

} // namespace fibrep

#endif
