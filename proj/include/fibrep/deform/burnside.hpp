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

#ifndef FIBREP_DEFORM_BURNSIDE_HPP
#define FIBREP_DEFORM_BURNSIDE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/linalg/elimination.hpp"
#include "fibrep/linalg/matrix.hpp"
#include "fibrep/numfield/embedding.hpp"

namespace fibrep {

struct BurnsideResult {
    bool irreducible = false;
    std::size_t algebra_dim = 0;
    std::vector<std::size_t> dims_per_round;  // span dimension after each closure round
};

template <class T>
std::vector<T> flatten(const Matrix<T>& m)
{
    std::vector<T> v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& x : m.row(i)) v.push_back(x);
    return v;
}

/// Dimension of the unital algebra generated by `mats`, by span closure under left
/// multiplication; irreducible iff it is all of M(d).
template <class T>
BurnsideResult burnside_irreducible(const std::vector<Matrix<T>>& mats)
{
    if (mats.empty()) throw dimension_error("burnside: no matrices");
    const std::size_t d = mats.front().rows();
    for (const auto& m : mats)
        if (!m.is_square() || m.rows() != d) throw dimension_error("burnside: matrices differ in size");
    IncrementalBasis<T> span(d * d);
    std::vector<Matrix<T>> frontier{Matrix<T>::identity(d, mats.front().zero())};
    span.add(flatten(frontier.front()));
    BurnsideResult r;
    r.dims_per_round.push_back(span.dim());
    while (!frontier.empty() && !span.full()) {
        std::vector<Matrix<T>> next;
        for (const auto& b : frontier)
            for (const auto& g : mats) {
                auto p = g * b;
                if (span.add(flatten(p))) next.push_back(std::move(p));
            }
        frontier = std::move(next);
        if (!frontier.empty()) r.dims_per_round.push_back(span.dim());
    }
    r.algebra_dim = span.dim();
    r.irreducible = r.algebra_dim == d * d;
    return r;
}

using CMatrix = std::vector<std::vector<std::complex<double>>>;

inline CMatrix embed_matrix(const Matrix<FieldElement>& m, std::size_t root_choice)
{
    CMatrix out(m.rows(), std::vector<std::complex<double>>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = embed_numeric(m(i, j), root_choice, 20).approx();
    return out;
}

/// Floating-point span closure with relative tolerance `tol`; residuals between tol and
/// sqrt(tol) are treated as ill-conditioned.
inline BurnsideResult burnside_irreducible_numeric(const std::vector<CMatrix>& mats, double tol = 1e-8)
{
    if (mats.empty()) throw dimension_error("burnside: no matrices");
    const std::size_t d = mats.front().size();
    double scale = 1.0;
    for (const auto& m : mats) {
        if (m.size() != d) throw dimension_error("burnside: matrices differ in size");
        for (const auto& row : m) {
            if (row.size() != d) throw dimension_error("burnside: matrices must be square");
            for (const auto& x : row) scale = std::max(scale, std::abs(x));
        }
    }
    using Vec = std::vector<std::complex<double>>;
    std::vector<Vec> ortho;
    auto add = [&](const CMatrix& m) {
        Vec v;
        double norm0 = 0;
        for (const auto& row : m)
            for (const auto& x : row) {
                v.push_back(x / scale);
                norm0 = std::max(norm0, std::abs(x / scale));
            }
        if (norm0 == 0) return false;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : ortho) {
                std::complex<double> dot = 0;
                for (std::size_t k = 0; k < v.size(); ++k) dot += std::conj(q[k]) * v[k];
                for (std::size_t k = 0; k < v.size(); ++k) v[k] -= dot * q[k];
            }
        double nrm = 0;
        for (const auto& x : v) nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        const double rel = nrm / norm0;
        if (rel < tol) return false;
        if (rel < std::sqrt(tol)) throw indeterminate_error("burnside: numerically ill-conditioned span; use exact mode");
        for (auto& x : v) x /= nrm;
        ortho.push_back(std::move(v));
        return true;
    };
    auto mul = [d](const CMatrix& a, const CMatrix& b) {
        CMatrix c(d, std::vector<std::complex<double>>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    CMatrix id(d, std::vector<std::complex<double>>(d));
    for (std::size_t i = 0; i < d; ++i) id[i][i] = 1;
    std::vector<CMatrix> frontier{id};
    add(id);
    BurnsideResult r;
    r.dims_per_round.push_back(ortho.size());
    while (!frontier.empty() && ortho.size() < d * d) {
        std::vector<CMatrix> next;
        for (const auto& b : frontier)
            for (const auto& g : mats) {
                auto p = mul(g, b);
                double mx = 0;
                for (const auto& row : p)
                    for (const auto& x : row) mx = std::max(mx, std::abs(x));
                if (mx > 0)
                    for (auto& row : p)
                        for (auto& x : row) x /= mx / scale;
                if (add(p)) next.push_back(std::move(p));
            }
        frontier = std::move(next);
        if (!frontier.empty()) r.dims_per_round.push_back(ortho.size());
    }
    r.algebra_dim = ortho.size();
    r.irreducible = r.algebra_dim == d * d;
    return r;
}

} // namespace fibrep

#endif
