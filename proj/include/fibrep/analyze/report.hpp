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

#ifndef FIBREP_ANALYZE_REPORT_HPP
#define FIBREP_ANALYZE_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibrep/analyze/hypotheses.hpp"
#include "fibrep/cohomology/twisted.hpp"
#include "fibrep/deform/burnside.hpp"
#include "fibrep/group/presentation.hpp"
#include "fibrep/rep/rep.hpp"

namespace fibrep {

using json = nlohmann::ordered_json;

inline json to_json(const QPoly& p)
{
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const FieldElement& x) { return x.coeff_strings(); }

template <class T>
json to_json(const Matrix<T>& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

struct AnalysisInput {
    int genus = 0;
    int punctures = 1;
    std::optional<MonodromySpec> words;  // absent for homology-level input
    Matrix<Rational> phi_star;
    std::size_t k = 0;
    QPoly q_sq;
    std::size_t n = 2;
    AnalysisOptions options;
};

struct Verdict {
    json doc;
    bool input_ok = true;
    bool hypotheses_hold = false;
    bool predictions_match = false;

    int exit_code() const { return !input_ok ? 2 : (hypotheses_hold && predictions_match ? 0 : 1); }
};

/// Runs every stage; failures are recorded in the document instead of thrown.
inline Verdict full_report(const AnalysisInput& in)
{
    Verdict v;
    json& d = v.doc;
    const std::size_t n = in.n, k = in.k;
    bool match = true;
    auto fail = [&](json& stage, const std::exception& e) {
        stage["error"] = e.what();
        match = false;
    };
    d["n"] = n;
    d["surface"] = {{"genus", in.genus}, {"punctures", in.punctures}};

    json mono;
    mono["phi_star"] = to_json(in.phi_star);
    mono["char_poly"] = to_json(char_poly(in.phi_star));
    if (in.genus > 0) {
        const std::size_t b = static_cast<std::size_t>(2 * in.genus);
        mono["closed_char_poly"] = to_json(char_poly(in.phi_star.block(0, 0, b, b)));
    }
    mono["k"] = k;
    d["monodromy"] = mono;

    std::optional<LambdaField> L;
    json lam;
    lam["factor"] = to_json(in.q_sq);
    try {
        L = lambda_field_from_factor(in.q_sq, {in.options.modulus, in.options.assert_irreducible});
        lam["modulus"] = to_json(L->modulus);
        lam["degree"] = L->field->degree();
        lam["root_choice"] = in.options.root_choice;
        lam["lambda_numeric"] = embed_numeric(L->lambda, in.options.root_choice, in.options.precision).str(20);
    } catch (const std::exception& e) {
        lam["error"] = e.what();
        v.input_ok = false;
    }
    d["lambda"] = lam;
    if (!L) {
        d["verdict"] = {{"hypotheses_hold", false}, {"predictions_match", false}, {"summary", "lambda field construction failed"}};
        return v;
    }

    HypothesisReport hyp;
    json hj;
    try {
        hyp = check_hypotheses(in.phi_star, static_cast<std::size_t>(in.genus), k, *L, n, in.options);
        hj["simple_eigenvalue"] = hyp.simple_eigenvalue;
        hj["archimedean"] = to_string(hyp.archimedean);
        hj["one_not_eigenvalue_closed"] = hyp.one_not_eigenvalue_closed;
        json pc = json::object();
        for (std::size_t j = 2; j <= n; ++j) pc["lambda^" + std::to_string(2 * j)] = static_cast<bool>(hyp.power_conditions[j - 2]);
        hj["power_conditions"] = pc;
        v.hypotheses_hold = hyp.all_hold();
    } catch (const std::exception& e) {
        hj["error"] = e.what();
    }
    hj["all_hold"] = v.hypotheses_hold;
    d["hypotheses"] = hj;

    std::optional<EigenData> eig;
    try {
        eig = eigen_data(in.phi_star, *L);
        d["eigenvector"] = {{"a", json::array()}, {"nonzero_index", eig->nonzero_index}, {"eigenspace_dim", eig->eigenspace_dim}};
        for (const auto& x : eig->a) d["eigenvector"]["a"].push_back(to_json(x));
    } catch (const std::exception& e) {
        d["eigenvector"] = {{"error", e.what()}};
        match = false;
    }

    json pred = {{"h1", k * (n - 1)}, {"z1", hyp.predicted_dim()}, {"formula", "(n+1+k)(n-1) - h0"}};

    if (!in.words) {
        d["cohomology"] = {{"skipped", "homology-level monodromy: no presentation for the Fox pipeline"}};
        d["predicted"] = pred;
    } else if (eig) {
        std::optional<Rep<FieldElement>> rho, rhon;
        json rj;
        try {
            const auto mt = mapping_torus_presentation(*in.words);
            rho = build_rho_lambda(mt, *eig);
            rhon = compose_r_n(*rho, n);
            rj["generators"] = mt.presentation.generator_count();
            rj["relators"] = mt.presentation.relators.size();
            rj["relators_verified"] = true;
        } catch (const std::exception& e) {
            fail(rj, e);
        }
        d["representation"] = rj;
        if (rhon) {
            json cj;
            try {
                const auto ad = adjoint_action(*rhon);
                const auto dims = cohomology_dims(ad);
                hyp.h0 = dims.h0;
                hyp.h1 = dims.h1;
                hyp.z1 = dims.z1;
                pred["z1"] = hyp.predicted_dim();
                cj = {{"h0", dims.h0}, {"b1", dims.b1}, {"z1", dims.z1}, {"h1", dims.h1}};
                const bool ok_h1 = dims.h1 == k * (n - 1);
                const bool ok_z1 = static_cast<long>(dims.z1) == hyp.predicted_dim();
                const bool ok_b1 = dims.b1 == n * n - 1 - dims.h0;
                cj["h1_matches"] = ok_h1;
                cj["z1_matches"] = ok_z1;
                cj["b1_matches"] = ok_b1;
                match = match && ok_h1 && ok_z1 && ok_b1 && dims.h0 == 0;
            } catch (const std::exception& e) {
                fail(cj, e);
            }
            d["predicted"] = pred;
            d["cohomology"] = cj;

            json bj;
            try {
                const auto b = burnside_irreducible(rhon->act.matrices());
                bj = {{"algebra_dim", b.algebra_dim}, {"full_dim", n * n}, {"reducible", !b.irreducible}};
                match = match && !b.irreducible;
            } catch (const std::exception& e) {
                fail(bj, e);
            }
            d["burnside"] = bj;

            json ij;
            if (n >= 4) {
                try {
                    const auto r = induction_check(*rho, in.phi_star, *eig, n);
                    ij = {{"compared", "H^1(R_" + std::to_string(n - 1) + ") vs H^1(R_" + std::to_string(n - 3) + ")"},
                          {"hypotheses_hold", r.hypotheses_hold},
                          {"h1_upper", r.h1_upper},
                          {"h1_lower", r.h1_lower},
                          {"equal", r.equal}};
                    if (r.hypotheses_hold) match = match && r.equal;
                } catch (const std::exception& e) {
                    fail(ij, e);
                }
            } else {
                ij = {{"skipped", "needs n >= 4"}};
            }
            d["induction"] = ij;

            if (n == 2) {
                json sj;
                try {
                    const auto s = s_matrix_n2(*rho, in.phi_star, *eig);
                    sj = {{"nullity", s.nullity},
                          {"expected_nullity", 2 + k},
                          {"nullity_with_surface_row", s.nullity_with_surface_row},
                          {"diagonal_blocks_match", s.diagonal_blocks_match},
                          {"lower_blocks_zero", s.lower_blocks_zero},
                          {"eigenvector_in_kernel", s.eigenvector_in_kernel}};
                    bool ok = s.nullity == 2 + k && s.diagonal_blocks_match && s.lower_blocks_zero && s.eigenvector_in_kernel;
                    if (hyp.z1) ok = ok && *hyp.z1 == s.nullity_with_surface_row + 2;
                    sj["agrees_with_fox_pipeline"] = ok;
                    match = match && ok;
                } catch (const std::exception& e) {
                    fail(sj, e);
                }
                d["s_matrix"] = sj;
            }

            json tj;
            try {
                const auto& t = rho->act[rho->act.size() - 1];
                const auto& ti = rho->act.inverse_of(rho->act.size() - 1);
                Presentation z2{{"a", "b"}, {Word({{0, 1}, {1, 1}, {0, -1}, {1, -1}})}};
                auto torus = make_rep(z2, FiberWeight{{0, 0}}, GeneratorAction<FieldElement>({t, t * t}, {ti, ti * ti}));
                const auto dims = cohomology_dims(adjoint_action(compose_r_n(torus, n)));
                tj = {{"h1", dims.h1}, {"expected", 2 * (n - 1)}};
                match = match && dims.h1 == 2 * (n - 1);
            } catch (const std::exception& e) {
                fail(tj, e);
            }
            d["torus_check"] = tj;
        }
    }
    v.predictions_match = match;
    d["verdict"] = {{"hypotheses_hold", v.hypotheses_hold},
                    {"predictions_match", v.predictions_match},
                    {"summary", v.hypotheses_hold ? (v.predictions_match ? "hypotheses satisfied; dimensions match"
                                                                         : "hypotheses satisfied; dimension check incomplete or failed")
                                                  : "hypotheses not satisfied"}};
    return v;
}

} // namespace fibrep

#endif
