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

#ifndef FIBREP_REP_REP_HPP
#define FIBREP_REP_REP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/group/fox.hpp"
#include "fibrep/group/presentation.hpp"
#include "fibrep/linalg/elimination.hpp"
#include "fibrep/numfield/lambda_field.hpp"
#include "fibrep/rep/adjoint.hpp"
#include "fibrep/rep/symmetric_power.hpp"

namespace fibrep {

/// Generator matrices of a presentation, checked against every relator.
template <class T>
struct Rep {
    Presentation presentation;
    FiberWeight weight;
    GeneratorAction<T> act;

    std::size_t degree() const { return act.dim(); }
};

/// A Gamma-module is stored exactly like a representation.
template <class T>
using ModuleAction = Rep<T>;

template <class T>
void verify_relators(const Rep<T>& r)
{
    if (r.act.size() != r.presentation.generator_count())
        throw dimension_error("representation: " + std::to_string(r.act.size()) + " matrices for " +
                              std::to_string(r.presentation.generator_count()) + " generators");
    if (auto bad = r.act.failing_relator(r.presentation))
        throw relator_error("relator " + std::to_string(*bad + 1) + " (" +
                            format_word(r.presentation.relators[*bad], r.presentation.labels) + ") is not satisfied");
}

template <class T>
Rep<T> make_rep(Presentation p, FiberWeight w, GeneratorAction<T> act)
{
    Rep<T> r{std::move(p), std::move(w), std::move(act)};
    verify_relators(r);
    return r;
}

/// Applies f to every generator matrix and its inverse.
template <class T, class F>
Rep<T> transform_rep(const Rep<T>& r, F&& f)
{
    std::vector<Matrix<T>> m, inv;
    for (std::size_t g = 0; g < r.act.size(); ++g) {
        m.push_back(f(r.act[g]));
        inv.push_back(f(r.act.inverse_of(g)));
    }
    return make_rep(r.presentation, r.weight, GeneratorAction<T>(std::move(m), std::move(inv)));
}

struct EigenData {
    FieldElement lambda;
    FieldElement lambda_sq;
    std::vector<FieldElement> a;
    std::size_t nonzero_index = 0;
    std::size_t eigenspace_dim = 0;
};

/// Eigenvector of phi* for lambda^2 over the lambda field (first canonical kernel vector).
inline EigenData eigen_data(const Matrix<Rational>& phi_star, const LambdaField& L)
{
    const auto& K = L.field;
    auto m = phi_star.map([&](const Rational& q) { return K->from_rational(q); });
    auto shifted = m - scale(L.lambda_sq, Matrix<FieldElement>::identity(m.rows(), K->zero()));
    auto ker = kernel_basis(shifted);
    if (ker.empty()) throw math_error("eigen_data: lambda^2 is not an eigenvalue of phi*");
    EigenData e{L.lambda, L.lambda_sq, ker.front(), 0, ker.size()};
    while (is_zero(e.a[e.nonzero_index])) ++e.nonzero_index;
    return e;
}

/// g_j -> [[1, a_j], [0, 1]], t -> diag(lambda, 1/lambda).
inline Rep<FieldElement> build_rho_lambda(const MappingTorus& mt, const EigenData& e)
{
    const auto K = e.lambda.field();
    const std::size_t m = mt.t_index;
    if (e.a.size() != m) throw dimension_error("build_rho_lambda: eigenvector length differs from the surface rank");
    std::vector<Matrix<FieldElement>> mats, inv;
    auto unip = [&](const FieldElement& x) {
        Matrix<FieldElement> u = Matrix<FieldElement>::identity(2, K->zero());
        u(0, 1) = x;
        return u;
    };
    for (std::size_t j = 0; j < m; ++j) {
        mats.push_back(unip(e.a[j]));
        inv.push_back(unip(-e.a[j]));
    }
    const auto li = e.lambda.inverse();
    mats.push_back(Matrix<FieldElement>::diagonal({e.lambda, li}));
    inv.push_back(Matrix<FieldElement>::diagonal({li, e.lambda}));
    return make_rep(mt.presentation, mt.weight, GeneratorAction<FieldElement>(std::move(mats), std::move(inv)));
}

/// r_n composed with a degree-2 representation.
template <class T>
Rep<T> compose_r_n(const Rep<T>& rho, std::size_t n)
{
    if (rho.degree() != 2) throw dimension_error("compose_r_n needs a degree-2 representation");
    return transform_rep(rho, [n](const Matrix<T>& g) { return r_n(g, n); });
}

/// sl(n) with the adjoint action of a degree-n representation.
template <class T>
ModuleAction<T> adjoint_action(const Rep<T>& rho)
{
    std::vector<Matrix<T>> m, inv;
    for (std::size_t g = 0; g < rho.act.size(); ++g) {
        m.push_back(adjoint_matrix(rho.act[g], rho.act.inverse_of(g)));
        inv.push_back(adjoint_matrix(rho.act.inverse_of(g), rho.act[g]));
    }
    return make_rep(rho.presentation, rho.weight, GeneratorAction<T>(std::move(m), std::move(inv)));
}

/// R_m: homogeneous polynomials of degree m with the action r_{m+1} o rho; R_0 is trivial.
template <class T>
ModuleAction<T> module_R(std::size_t m, const Rep<T>& rho)
{
    return compose_r_n(rho, m + 1);
}

/// C_alpha: g acts by alpha^{psi(g)}.
inline ModuleAction<FieldElement> module_C(const FieldElement& alpha, const Presentation& p, const FiberWeight& w)
{
    if (alpha.is_zero()) throw math_error("module_C: alpha must be nonzero");
    std::vector<Matrix<FieldElement>> m, inv;
    for (std::size_t g = 0; g < p.generator_count(); ++g) {
        const auto x = alpha.pow(w.psi.at(g));
        m.push_back(Matrix<FieldElement>::diagonal({x}));
        inv.push_back(Matrix<FieldElement>::diagonal({x.inverse()}));
    }
    return make_rep(p, w, GeneratorAction<FieldElement>(std::move(m), std::move(inv)));
}

/// tr Ad(r_n(M)) against sum_{j=1}^{n-1} tr r_{2j+1}(M).
template <class T>
bool clebsch_gordan_trace_check(const Matrix<T>& m, std::size_t n)
{
    const auto g = r_n(m, n);
    Matrix<T> mi(2, 2, m.zero());
    mi(0, 0) = m(1, 1);
    mi(1, 1) = m(0, 0);
    mi(0, 1) = -m(0, 1);
    mi(1, 0) = -m(1, 0);
    const T lhs = adjoint_matrix(g, r_n(mi, n)).trace();
    T rhs = m.zero();
    for (std::size_t j = 1; j < n; ++j) rhs = rhs + r_n(m, 2 * j + 1).trace();
    return is_zero(lhs - rhs);
}

} // namespace fibrep

#endif
