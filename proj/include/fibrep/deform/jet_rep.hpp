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

#ifndef FIBREP_DEFORM_JET_REP_HPP
#define FIBREP_DEFORM_JET_REP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fibrep/cohomology/twisted.hpp"
#include "fibrep/error.hpp"
#include "fibrep/linalg/elimination.hpp"
#include "fibrep/numfield/jet_matrix.hpp"
#include "fibrep/rep/rep.hpp"

namespace fibrep {

/// g -> exp(sum_{i<m} t^i u_i(g)) rho(g) over K[t]/(t^m).
template <class T>
struct JetRep {
    Rep<T> base;
    std::size_t order = 1;
    std::vector<std::vector<Matrix<T>>> cochains;  // cochains[i-1][g] = u_i(g)
    std::vector<JetMatrix<T>> mats, inverses;

    std::size_t degree() const { return base.degree(); }

    JetMatrix<T> evaluate(const Word& w) const
    {
        JetMatrix<T> r = JetMatrix<T>::identity(degree(), Jet<T>(order, base.act.zero()));
        for (const auto& x : w.letters()) r = r * (x.exp > 0 ? mats.at(x.gen) : inverses.at(x.gen));
        return r;
    }
};

/// Splits a stacked sl(n)-coordinate vector into per-generator matrices.
template <class T>
std::vector<Matrix<T>> cochain_matrices(const std::vector<T>& stacked, std::size_t n, std::size_t generators)
{
    const std::size_t d = n * n - 1;
    if (stacked.size() != d * generators) throw dimension_error("cochain vector has the wrong length");
    std::vector<Matrix<T>> out;
    for (std::size_t g = 0; g < generators; ++g)
        out.push_back(sl_from_coords(std::vector<T>(stacked.begin() + static_cast<std::ptrdiff_t>(g * d),
                                                    stacked.begin() + static_cast<std::ptrdiff_t>((g + 1) * d)),
                                     n));
    return out;
}

template <class T>
std::vector<T> stack_cochain(const std::vector<Matrix<T>>& u)
{
    std::vector<T> out;
    for (const auto& m : u)
        for (const auto& c : sl_coords(m)) out.push_back(c);
    return out;
}

/// Builds the jets of order `order` from the given cochains (missing orders are zero).
template <class T>
JetRep<T> make_jet_rep(const Rep<T>& base, const std::vector<std::vector<Matrix<T>>>& cochains, std::size_t order)
{
    if (order < 1) throw math_error("jet order must be positive");
    JetRep<T> j{base, order, cochains, {}, {}};
    const std::size_t n = base.degree(), G = base.act.size();
    const T zero = base.act.zero();
    for (std::size_t g = 0; g < G; ++g) {
        std::vector<Matrix<T>> parts(order, Matrix<T>(n, n, zero));
        for (std::size_t i = 1; i < order && i <= cochains.size(); ++i) {
            if (cochains[i - 1].size() != G) throw dimension_error("cochain has the wrong number of generators");
            parts[i] = cochains[i - 1][g];
        }
        const auto X = jet_matrix_from_coefficients(parts);
        j.mats.push_back(jet_exp(X) * lift_constant(base.act[g], order));
        j.inverses.push_back(lift_constant(base.act.inverse_of(g), order) * jet_exp(-X));
    }
    return j;
}

/// Relator index whose image differs from I below t^order, if any.
template <class T>
std::optional<std::size_t> jet_relator_failure(const JetRep<T>& j)
{
    for (std::size_t r = 0; r < j.base.presentation.relators.size(); ++r)
        if (!j.evaluate(j.base.presentation.relators[r]).is_identity()) return r;
    return std::nullopt;
}

/// g -> (I + t u(g)) rho(g) mod t^2 for a stacked cocycle u.
template <class T>
JetRep<T> first_order(const Rep<T>& rho, const std::vector<T>& u)
{
    auto j = make_jet_rep(rho, {cochain_matrices(u, rho.degree(), rho.act.size())}, 2);
    if (auto bad = jet_relator_failure(j))
        throw relator_error("first_order: u is not a cocycle; relator " + std::to_string(*bad + 1) + " (" +
                            format_word(rho.presentation.relators[*bad], rho.presentation.labels) + ") fails mod t^2");
    return j;
}

template <class T>
struct ObstructionResult {
    std::size_t order = 0;  // the power of t being solved for
    bool solvable = false;
    std::vector<T> next_cochain;  // stacked u_order when solvable
    std::vector<T> residual;      // inconsistent components otherwise
};

/// Linear system for the next cochain, shared across orders.
template <class T>
class ObstructionSolver {
public:
    explicit ObstructionSolver(const Rep<T>& rho) : rho_(rho), ad_(adjoint_action(rho)), solver_(cocycle_system(ad_)) {}

    const Rep<T>& base() const noexcept { return rho_; }
    const ModuleAction<T>& adjoint() const noexcept { return ad_; }
    const AffineSolver<T>& solver() const noexcept { return solver_; }

    /// Solves J U = -D for a stacked relator defect D.
    ObstructionResult<T> solve(const std::vector<T>& defect, std::size_t order) const
    {
        std::vector<T> rhs;
        for (const auto& x : defect) rhs.push_back(-x);
        ObstructionResult<T> r;
        r.order = order;
        if (auto x = solver_.solve(rhs)) {
            r.solvable = true;
            r.next_cochain = std::move(*x);
        } else {
            r.residual = solver_.residual(rhs);
        }
        return r;
    }

    /// t^{m} defect of every relator for a JetRep valid mod t^m, in sl(n) coordinates.
    std::vector<T> defect(const JetRep<T>& j) const
    {
        const std::size_t m = j.order;
        auto probe = make_jet_rep(j.base, j.cochains, m + 1);
        std::vector<T> d;
        for (const auto& r : j.base.presentation.relators) {
            const auto v = probe.evaluate(r);
            for (std::size_t k = 1; k < m; ++k)
                if (!jet_coefficient(v, k).is_zero()) throw relator_error("defect: jet representation fails below t^" + std::to_string(m));
            for (const auto& c : sl_coords(jet_coefficient(v, m))) d.push_back(c);
        }
        return d;
    }

    /// Tries to extend a JetRep valid mod t^m to one valid mod t^{m+1}.
    ObstructionResult<T> extend_order(const JetRep<T>& j) const { return solve(defect(j), j.order); }

private:
    Rep<T> rho_;
    ModuleAction<T> ad_;
    AffineSolver<T> solver_;
};

template <class T>
ObstructionResult<T> extend_order(const JetRep<T>& j)
{
    return ObstructionSolver<T>(j.base).extend_order(j);
}

struct DeformationReport {
    std::vector<std::size_t> solved_orders;
    std::optional<std::size_t> obstructed_at;
};

/// Starts from a cocycle and extends order by order until valid mod t^target.
template <class T>
std::pair<DeformationReport, JetRep<T>> deform_to_order(const ObstructionSolver<T>& solver, const std::vector<T>& cocycle,
                                                        std::size_t target)
{
    JetRep<T> j = first_order(solver.base(), cocycle);
    DeformationReport rep;
    rep.solved_orders.push_back(2);
    while (j.order < target) {
        auto r = solver.extend_order(j);
        if (!r.solvable) {
            rep.obstructed_at = j.order;
            break;
        }
        auto cs = j.cochains;
        cs.push_back(cochain_matrices(r.next_cochain, j.degree(), j.base.act.size()));
        j = make_jet_rep(j.base, cs, j.order + 1);
        if (jet_relator_failure(j)) throw math_error("deform_to_order: extension failed verification");
        rep.solved_orders.push_back(j.order);
    }
    return {rep, j};
}

/// Cochains of the conjugation path exp(t v) rho exp(-t v) in the exponential form.
template <class T>
std::vector<std::vector<Matrix<T>>> conjugation_cochains(const Rep<T>& rho, const Matrix<T>& v, std::size_t order)
{
    const std::size_t n = rho.degree();
    const T zero = rho.act.zero();
    std::vector<Matrix<T>> vp(order, Matrix<T>(n, n, zero));
    if (order > 1) vp[1] = v;
    const auto tv = jet_matrix_from_coefficients(vp);
    const auto e_plus = jet_exp(tv), e_minus = jet_exp(-tv);
    std::vector<std::vector<Matrix<T>>> out(order - 1);
    for (std::size_t g = 0; g < rho.act.size(); ++g) {
        const auto rg = lift_constant(rho.act[g], order), rgi = lift_constant(rho.act.inverse_of(g), order);
        const auto L = jet_log(e_plus * rg * e_minus * rgi);
        for (std::size_t i = 1; i < order; ++i) out[i - 1].push_back(jet_coefficient(L, i));
    }
    return out;
}

} // namespace fibrep

#endif
