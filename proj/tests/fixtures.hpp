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

// Hand-built monodromies shared by the test programs.

#ifndef FIBREP_TESTS_FIXTURES_HPP
#define FIBREP_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "fibrep/group/presentation.hpp"
#include "fibrep/group/twist.hpp"
#include "fibrep/group/word.hpp"
#include "fibrep/numfield/lambda_field.hpp"
#include "fibrep/rep/rep.hpp"

namespace fibrep::fixtures {

inline MonodromySpec words_spec(int genus, int punctures, const std::vector<std::string>& images,
                                const std::string& conjugator = "")
{
    MonodromySpec s;
    s.genus = genus;
    s.punctures = punctures;
    const auto l = surface_labels(s.surface_rank());
    for (const auto& w : images) s.images.push_back(parse_word(w, l));
    for (int j = 0; j < punctures; ++j) s.puncture_permutation.push_back(static_cast<std::size_t>(j));
    if (!conjugator.empty()) s.relator_conjugator = parse_word(conjugator, l);
    return s;
}

inline MonodromySpec identity_monodromy(int genus, int punctures)
{
    std::vector<std::string> im;
    for (int i = 1; i <= 2 * genus + punctures; ++i) im.push_back("g" + std::to_string(i));
    return words_spec(genus, punctures, im);
}

/// Once-punctured torus bundle with monodromy [[2,1],[1,1]].
inline MonodromySpec figure_eight() { return words_spec(1, 1, {"g1 g2 g1", "g2 g1", "g3"}); }

inline MonodromySpec figure_eight_inverse() { return words_spec(1, 1, {"g1 g2^-1", "g2 g2 g1^-1", "g3"}); }

/// Genus 2, two punctures; H_1 action is T_a2^-1 T_a1^-1 T_(b1+b2) T_b2 T_b1.
inline MonodromySpec genus2()
{
    const std::string c = "g4 g3 g2 g1";
    return words_spec(2, 2,
                      {"g4 g3 g2 g1 g1 g2 g1", "g2 g1", "g2 g1 g4 g3 g3 g4 g3", "g4 g3",
                       c + " g5 g1^-1 g2^-1 g3^-1 g4^-1", c + " g6 g1^-1 g2^-1 g3^-1 g4^-1"},
                      c);
}

inline std::vector<TwistStep> genus2_twists()
{
    return {{{0, 1, 0, 0}, 1}, {{0, 0, 0, 1}, 1}, {{0, 1, 0, 1}, 1}, {{1, 0, 0, 0}, -1}, {{0, 0, 1, 0}, -1}};
}

/// Genus 2 with the first handle twisted like the figure eight and the second handle fixed.
inline MonodromySpec fixed_handle()
{
    return words_spec(2, 2, {"g1 g2 g1", "g2 g1", "g3", "g4", "g5", "g6"});
}

struct LambdaSetup {
    MonodromySpec spec;
    MappingTorus torus;
    AbelianizedAction ab;
    LambdaField L;
    EigenData eig;
    Rep<FieldElement> rho;
    GeneratorAction<FieldElement> act;
};

inline LambdaSetup lambda_setup(const MonodromySpec& spec, const QPoly& q_sq)
{
    LambdaSetup s{spec, mapping_torus_presentation(spec), abelianized_action(spec), lambda_field_from_factor(q_sq), {}, {}, {}};
    s.eig = eigen_data(s.ab.phi_star, s.L);
    s.rho = build_rho_lambda(s.torus, s.eig);
    s.act = s.rho.act;
    return s;
}

inline LambdaSetup genus2_rho(const QPoly& q_sq) { return lambda_setup(genus2(), q_sq); }

/// Z^2 = <a, b | [a, b]> with a -> diag(p, 1/p), b -> diag(q, 1/q).
template <class T>
Rep<T> torus_rep(const T& p, const T& q)
{
    Presentation pr{{"a", "b"}, {Word({{0, 1}, {1, 1}, {0, -1}, {1, -1}})}};
    auto dg = [](const T& x) { return Matrix<T>::diagonal({x, inverse(x)}); };
    return make_rep(pr, FiberWeight{{0, 0}}, GeneratorAction<T>({dg(p), dg(q)}, {dg(inverse(p)), dg(inverse(q))}));
}

} // namespace fibrep::fixtures

#endif
