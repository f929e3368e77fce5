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

#ifndef FIBREP_ANALYZE_HYPOTHESES_HPP
#define FIBREP_ANALYZE_HYPOTHESES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fibrep/group/presentation.hpp"
#include "fibrep/linalg/charpoly.hpp"
#include "fibrep/numfield/embedding.hpp"
#include "fibrep/numfield/lambda_field.hpp"

namespace fibrep {

struct AnalysisOptions {
    std::size_t root_choice = 0;
    int precision = 50;
    std::optional<QPoly> modulus;
    bool assert_irreducible = false;
};

struct HypothesisReport {
    bool simple_eigenvalue = false;
    Tristate archimedean = Tristate::indeterminate;
    bool one_not_eigenvalue_closed = false;
    std::vector<bool> power_conditions;  // entry j-2 for lambda^{2j}, 2 <= j <= n
    std::size_t k = 0;
    std::size_t n = 0;
    std::optional<std::size_t> h0, h1, z1;

    bool all_hold() const
    {
        bool ok = simple_eigenvalue && archimedean == Tristate::yes && one_not_eigenvalue_closed;
        for (bool b : power_conditions) ok = ok && b;
        return ok;
    }

    /// (n+1+k)(n-1) - h0, with h0 = 0 until computed.
    long predicted_dim() const
    {
        const long nn = static_cast<long>(n), kk = static_cast<long>(k);
        return (nn + 1 + kk) * (nn - 1) - static_cast<long>(h0.value_or(0));
    }
};

/// Hypotheses from the abelianized action alone (no presentation needed).
inline HypothesisReport check_hypotheses(const Matrix<Rational>& phi_star, std::size_t genus, std::size_t k,
                                         const LambdaField& L, std::size_t n, const AnalysisOptions& opt = {})
{
    if (n < 2) throw dimension_error("check_hypotheses needs n >= 2");
    HypothesisReport r;
    r.n = n;
    r.k = k;
    const QPoly cp = char_poly(phi_star);
    r.simple_eigenvalue = simple_factor_check(cp, L.q_sq);
    r.archimedean = modulus_not_one(L.lambda, opt.root_choice, opt.precision);
    const std::size_t b = 2 * genus;
    if (b == 0) {
        r.one_not_eigenvalue_closed = true;
    } else {
        r.one_not_eigenvalue_closed = !is_zero(char_poly(phi_star.block(0, 0, b, b)).eval(Rational(1)));
    }
    const auto cpK = to_field_poly(cp, L.field);
    for (std::size_t j = 2; j <= n; ++j)
        r.power_conditions.push_back(!cpK.eval(L.lambda.pow(static_cast<long>(2 * j))).is_zero());
    return r;
}

inline HypothesisReport check_hypotheses(const MonodromySpec& spec, const LambdaField& L, std::size_t n,
                                         const AnalysisOptions& opt = {})
{
    const auto ab = abelianized_action(spec);
    return check_hypotheses(ab.phi_star, static_cast<std::size_t>(spec.genus), ab.k, L, n, opt);
}

} // namespace fibrep

#endif
