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

#ifndef FIBREP_COHOMOLOGY_TWISTED_HPP
#define FIBREP_COHOMOLOGY_TWISTED_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/group/fox.hpp"
#include "fibrep/linalg/charpoly.hpp"
#include "fibrep/linalg/elimination.hpp"
#include "fibrep/rep/rep.hpp"

namespace fibrep {

/// Z^1 as the kernel of the Fox Jacobian; vectors stack z(g_1), ..., z(g_m).
template <class T>
struct CocycleSpace {
    std::size_t d = 0;
    std::size_t m = 0;
    std::vector<std::vector<T>> basis;
    std::size_t z1 = 0, b1 = 0, h0 = 0, h1 = 0;
};

struct CohomologyDims {
    std::size_t z1 = 0, b1 = 0, h0 = 0, h1 = 0;
};

/// dim of the common fixed space of all generators.
template <class T>
std::size_t h0_dim(const ModuleAction<T>& mod)
{
    const std::size_t d = mod.degree();
    std::vector<Matrix<T>> parts;
    for (const auto& a : mod.act.matrices()) parts.push_back(a - Matrix<T>::identity(d, a.zero()));
    return d - rank(vstack(parts));
}

template <class T>
Matrix<T> cocycle_system(const ModuleAction<T>& mod)
{
    verify_relators(mod);
    return fox_jacobian(mod.presentation, mod.act);
}

template <class T>
CocycleSpace<T> z1_space(const ModuleAction<T>& mod)
{
    CocycleSpace<T> c;
    c.d = mod.degree();
    c.m = mod.presentation.generator_count();
    c.basis = kernel_basis(cocycle_system(mod));
    c.z1 = c.basis.size();
    c.h0 = h0_dim(mod);
    c.b1 = c.d - c.h0;
    if (c.z1 < c.b1) throw math_error("z1_space: dim Z^1 < dim B^1, inconsistent module");
    c.h1 = c.z1 - c.b1;
    return c;
}

/// Dimensions only; skips building the kernel basis.
template <class T>
CohomologyDims cohomology_dims(const ModuleAction<T>& mod)
{
    CohomologyDims c;
    const auto J = cocycle_system(mod);
    c.z1 = J.cols() - rank(J);
    c.h0 = h0_dim(mod);
    c.b1 = mod.degree() - c.h0;
    if (c.z1 < c.b1) throw math_error("cohomology_dims: dim Z^1 < dim B^1, inconsistent module");
    c.h1 = c.z1 - c.b1;
    return c;
}

template <class T>
std::size_t h1_dim(const ModuleAction<T>& mod)
{
    return cohomology_dims(mod).h1;
}

/// Coboundary g -> u - g.u, stacked over generators.
template <class T>
std::vector<T> coboundary_vector(const ModuleAction<T>& mod, const std::vector<T>& u)
{
    std::vector<T> out;
    for (const auto& a : mod.act.matrices()) {
        const auto gu = a.apply(u);
        for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] - gu[i]);
    }
    return out;
}

template <class T>
std::vector<std::vector<T>> coboundary_basis(const ModuleAction<T>& mod)
{
    const std::size_t d = mod.degree();
    IncrementalBasis<T> b(d * mod.presentation.generator_count());
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<T> e(d, mod.act.zero());
        e[i] = one_like(mod.act.zero());
        b.add(coboundary_vector(mod, e));
    }
    return b.vectors();
}

/// The explicit n = 2 system: conjugation relators only, equations grouped by sl(2)
/// component (E12, H, E21); unknowns (x_1..x_m, y_0, y_1..y_m, z_1..z_m) with the t
/// components x_0 = z_0 = 0 fixed.
struct SMatrix {
    Matrix<FieldElement> S;
    std::size_t m = 0;
    std::size_t nullity = 0;
    std::size_t nullity_with_surface_row = 0;
    Matrix<FieldElement> K, C, D;  // blocks (x-eqs, y-vars), (x-eqs, z-vars), (y-eqs, z-vars)
    bool diagonal_blocks_match = false;
    bool lower_blocks_zero = false;
    bool y0_column_matches = false;
    bool eigenvector_in_kernel = false;
};

inline SMatrix s_matrix_n2(const Rep<FieldElement>& rho, const Matrix<Rational>& phi_star, const EigenData& e)
{
    if (rho.degree() != 2) throw dimension_error("s_matrix_n2 needs a degree-2 representation");
    const auto ad = adjoint_action(rho);
    const auto J = cocycle_system(ad);
    const std::size_t m = phi_star.rows(), t = m;
    const auto K = e.lambda.field();
    // column in J of (generator g, component c)
    auto jcol = [](std::size_t g, std::size_t c) { return 3 * g + c; };
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < m; ++j) cols.push_back(jcol(j, 0));
    cols.push_back(jcol(t, 1));
    for (std::size_t j = 0; j < m; ++j) cols.push_back(jcol(j, 1));
    for (std::size_t j = 0; j < m; ++j) cols.push_back(jcol(j, 2));

    auto assemble = [&](std::size_t relators) {
        Matrix<FieldElement> s(3 * relators, cols.size(), K->zero());
        for (std::size_t c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < relators; ++i)
                for (std::size_t k = 0; k < cols.size(); ++k) s(c * relators + i, k) = J(3 * i + c, cols[k]);
        return s;
    };

    SMatrix out;
    out.m = m;
    out.S = assemble(m);
    out.nullity = out.S.cols() - rank(out.S);
    out.nullity_with_surface_row = out.S.cols() - rank(assemble(m + 1));

    const auto M = phi_star.map([&](const Rational& q) { return K->from_rational(q); });
    const auto I = Matrix<FieldElement>::identity(m, K->zero());
    const auto& S = out.S;
    const auto xb = S.block(0, 0, m, m);
    const auto yb = S.block(m, m + 1, m, m);
    const auto zb = S.block(2 * m, 2 * m + 1, m, m);
    const auto l2 = e.lambda_sq, lm2 = e.lambda_sq.inverse();
    out.diagonal_blocks_match = xb == M - scale(l2, I) && yb == M - I && zb == M - scale(lm2, I);
    out.lower_blocks_zero = S.block(m, 0, 2 * m, m).is_zero() && S.block(2 * m, m, m, m + 1).is_zero();
    bool y0 = true;
    for (std::size_t i = 0; i < m; ++i) {
        y0 = y0 && S(i, m) == -(e.a[i] * l2 * Rational(2));
        y0 = y0 && S(m + i, m).is_zero() && S(2 * m + i, m).is_zero();
    }
    out.y0_column_matches = y0;
    out.K = S.block(0, m + 1, m, m);
    out.C = S.block(0, 2 * m + 1, m, m);
    out.D = S.block(m, 2 * m + 1, m, m);
    std::vector<FieldElement> v(S.cols(), K->zero());
    for (std::size_t i = 0; i < m; ++i) v[i] = e.a[i];
    bool in_ker = true;
    for (const auto& x : S.apply(v)) in_ker = in_ker && x.is_zero();
    out.eigenvector_in_kernel = in_ker;
    return out;
}

/// Coboundaries in the explicit n = 2 parametrization:
/// z'(g_i) = [[-a_i z, 2 a_i y + a_i^2 z], [0, a_i z]], z'(t) = [[0, x - l^2 x], [z - l^-2 z, 0]].
inline std::vector<std::vector<FieldElement>> explicit_coboundaries_n2(const EigenData& e)
{
    const auto K = e.lambda.field();
    const std::size_t m = e.a.size();
    const auto l2 = e.lambda_sq, lm2 = e.lambda_sq.inverse();
    std::vector<std::vector<FieldElement>> out;
    for (int which = 0; which < 3; ++which) {
        const FieldElement x = which == 0 ? K->one() : K->zero();
        const FieldElement y = which == 1 ? K->one() : K->zero();
        const FieldElement z = which == 2 ? K->one() : K->zero();
        std::vector<FieldElement> v;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& a = e.a[i];
            Matrix<FieldElement> zi(std::vector<std::vector<FieldElement>>{{-(a * z), a * y * Rational(2) + a * a * z}, {K->zero(), a * z}});
            for (const auto& c : sl_coords(zi)) v.push_back(c);
        }
        Matrix<FieldElement> zt(std::vector<std::vector<FieldElement>>{{K->zero(), x - l2 * x}, {z - lm2 * z, K->zero()}});
        for (const auto& c : sl_coords(zt)) v.push_back(c);
        out.push_back(std::move(v));
    }
    return out;
}

struct InductionReport {
    std::size_t n = 0;
    bool lambda_power_not_eigenvalue = false;
    bool lambda_power_not_one = false;
    bool hypotheses_hold = false;
    std::size_t h1_upper = 0;  // H^1(R_{n-1})
    std::size_t h1_lower = 0;  // H^1(R_{n-3})
    bool equal = false;
};

/// Compares H^1(R_{n-1}) with H^1(R_{n-3}); the hypothesis is checked, never assumed.
inline InductionReport induction_check(const Rep<FieldElement>& rho, const Matrix<Rational>& phi_star, const EigenData& e,
                                       std::size_t n)
{
    if (n < 3) throw dimension_error("induction_check needs n >= 3");
    InductionReport r;
    r.n = n;
    const auto K = e.lambda.field();
    const auto mu = e.lambda.pow(static_cast<long>(n - 1));
    r.lambda_power_not_eigenvalue = !to_field_poly(char_poly(phi_star), K).eval(mu).is_zero();
    r.lambda_power_not_one = !(mu == K->one());
    r.hypotheses_hold = r.lambda_power_not_eigenvalue && r.lambda_power_not_one;
    r.h1_upper = h1_dim(module_R(n - 1, rho));
    r.h1_lower = h1_dim(module_R(n - 3, rho));
    r.equal = r.h1_upper == r.h1_lower;
    return r;
}

} // namespace fibrep

#endif
