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

#ifndef FIBREP_GROUP_FOX_HPP
#define FIBREP_GROUP_FOX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/group/presentation.hpp"
#include "fibrep/group/word.hpp"
#include "fibrep/linalg/elimination.hpp"
#include "fibrep/linalg/matrix.hpp"

namespace fibrep {

/// Matrices for each generator (and their inverses), extended multiplicatively to words.
template <class T>
class GeneratorAction {
public:
    GeneratorAction() = default;

    explicit GeneratorAction(std::vector<Matrix<T>> mats) : m_(std::move(mats))
    {
        check_shapes();
        for (const auto& a : m_) inv_.push_back(fibrep::inverse(a));
    }

    GeneratorAction(std::vector<Matrix<T>> mats, std::vector<Matrix<T>> inverses) : m_(std::move(mats)), inv_(std::move(inverses))
    {
        check_shapes();
        if (inv_.size() != m_.size()) throw dimension_error("GeneratorAction: inverse count mismatch");
        for (std::size_t i = 0; i < m_.size(); ++i)
            if (!(m_[i] * inv_[i]).is_identity()) throw math_error("GeneratorAction: supplied inverse is wrong");
    }

    std::size_t size() const noexcept { return m_.size(); }
    std::size_t dim() const { return m_.front().rows(); }
    const T& zero() const { return m_.front().zero(); }
    const std::vector<Matrix<T>>& matrices() const noexcept { return m_; }
    const Matrix<T>& operator[](std::size_t g) const { return m_.at(g); }
    const Matrix<T>& inverse_of(std::size_t g) const { return inv_.at(g); }

    const Matrix<T>& of(const Letter& x) const
    {
        if (x.gen >= m_.size()) throw dimension_error("GeneratorAction: word uses generator " + std::to_string(x.gen + 1));
        return x.exp > 0 ? m_[x.gen] : inv_[x.gen];
    }

    Matrix<T> evaluate(const Word& w) const
    {
        Matrix<T> r = Matrix<T>::identity(dim(), zero());
        for (const auto& x : w.letters()) r = r * of(x);
        return r;
    }

    /// Index of the first relator that does not evaluate to the identity.
    std::optional<std::size_t> failing_relator(const Presentation& p) const
    {
        for (std::size_t r = 0; r < p.relators.size(); ++r)
            if (!evaluate(p.relators[r]).is_identity()) return r;
        return std::nullopt;
    }

private:
    void check_shapes() const
    {
        if (m_.empty()) throw dimension_error("GeneratorAction: no generators");
        for (const auto& a : m_)
            if (!a.is_square() || a.rows() != m_.front().rows())
                throw dimension_error("GeneratorAction: generator matrices must share one square size");
    }

    std::vector<Matrix<T>> m_, inv_;
};

/// Fox derivatives of one word, one d x d block per generator:
/// d(uv) = du + u dv, dg/dg = 1, dg^-1/dg = -g^-1.
template <class T>
std::vector<Matrix<T>> fox_row(const Word& w, const GeneratorAction<T>& act, std::size_t generators)
{
    const std::size_t d = act.dim();
    std::vector<Matrix<T>> blocks(generators, Matrix<T>(d, d, act.zero()));
    Matrix<T> prefix = Matrix<T>::identity(d, act.zero());
    for (const auto& x : w.letters()) {
        if (x.gen >= generators) throw dimension_error("fox_row: generator out of range");
        if (x.exp > 0) {
            blocks[x.gen] = blocks[x.gen] + prefix;
            prefix = prefix * act.of(x);
        } else {
            prefix = prefix * act.of(x);
            blocks[x.gen] = blocks[x.gen] - prefix;
        }
    }
    return blocks;
}

/// Block (r, g) is the Fox derivative of relator r in g, pushed through `act`.
template <class T>
Matrix<T> fox_jacobian(const Presentation& p, const GeneratorAction<T>& act)
{
    const std::size_t d = act.dim(), m = p.generator_count();
    if (act.size() != m) throw dimension_error("fox_jacobian: action and presentation disagree on generator count");
    Matrix<T> J(p.relators.size() * d, m * d, act.zero());
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        auto row = fox_row(p.relators[r], act, m);
        for (std::size_t g = 0; g < m; ++g) J.set_block(r * d, g * d, row[g]);
    }
    return J;
}

} // namespace fibrep

#endif
