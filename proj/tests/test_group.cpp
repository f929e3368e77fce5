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

#include <catch_amalgamated.hpp>

#include <random>

#include "fibrep/group/fox.hpp"
#include "fibrep/group/presentation.hpp"
#include "fibrep/group/twist.hpp"
#include "fibrep/group/word.hpp"
#include "fibrep/linalg/charpoly.hpp"
#include "fixtures.hpp"

using namespace fibrep;

TEST_CASE("words", "[group]")
{
    auto labels = surface_labels(3);
    labels.push_back("t");
    auto w = parse_word("g1 g2 g2^-1 t g3^-1 t^-1", labels);
    CHECK(format_word(w, labels) == "g1 t g3^-1 t^-1");
    CHECK((w * w.inverse()).empty());
    CHECK(parse_word("", labels).empty());
    CHECK_THROWS_AS(parse_word("g4", labels), parse_error);
    CHECK_THROWS_AS(parse_word("g1^2", labels), parse_error);
    CHECK(conjugate_in_free_group(parse_word("g1 g2 g3", labels), parse_word("g3 g1 g2", labels)));
    CHECK(conjugate_in_free_group(parse_word("g2 g1 g2^-1", labels), parse_word("g1", labels)));
    CHECK(!conjugate_in_free_group(parse_word("g1 g2", labels), parse_word("g2 g2", labels)));
}

TEST_CASE("mapping torus of the identity on a punctured torus", "[group]")
{
    auto spec = fixtures::identity_monodromy(1, 1);
    auto mt = mapping_torus_presentation(spec);
    const auto& p = mt.presentation;
    CHECK(p.generator_count() == 4);
    REQUIRE(p.relators.size() == 4);
    auto l = p.labels;
    CHECK(p.relators[0] == parse_word("g1 t g1^-1 t^-1", l));
    CHECK(p.relators[2] == parse_word("g3 t g3^-1 t^-1", l));
    CHECK(p.relators[3] == parse_word("g1 g2 g1^-1 g2^-1 g3^-1", l));
    for (const auto& r : p.relators) CHECK(mt.weight(r) == 0);
    auto ab = abelianized_action(spec);
    CHECK(ab.phi_star.is_identity());
    CHECK(ab.k == 1);
}

TEST_CASE("monodromy validation", "[group]")
{
    auto spec = fixtures::figure_eight();
    CHECK_NOTHROW(validate(spec));
    auto bad = spec;
    bad.images[1] = parse_word("g1", surface_labels(3));
    CHECK_THROWS_AS(validate(bad), relator_error);
    bad = spec;
    bad.images[2] = parse_word("g1 g3", surface_labels(3));
    CHECK_THROWS_AS(validate(bad), relator_error);
    bad = spec;
    bad.punctures = 0;
    CHECK_THROWS_AS(validate(bad), parse_error);
    bad = fixtures::identity_monodromy(0, 3);
    bad.puncture_permutation = {0, 0, 1};
    CHECK_THROWS_AS(validate(bad), parse_error);
    CHECK_THROWS_AS(validate(fixtures::identity_monodromy(0, 2)), parse_error);
}

TEST_CASE("abelianized action", "[group]")
{
    MonodromySpec s = fixtures::identity_monodromy(1, 1);
    auto l = surface_labels(3);
    s.images[0] = parse_word("g1 g2", l);
    // the surface relator is not preserved, so compare exponent sums directly
    auto m = exponent_sum_matrix({s.images[0], s.images[1]}, 2);
    CHECK(m.transpose() == Matrix<Rational>(std::vector<std::vector<Rational>>{{1, 0}, {1, 1}}));

    auto g2 = fixtures::genus2();
    auto ab = abelianized_action(g2);
    CHECK(ab.k == 2);
    CHECK(ab.P.is_identity());
    auto cp = char_poly(ab.closed_block);
    CHECK(cp == qpoly({1, -5, 1}) * qpoly({1, -3, 1}));
    CHECK(char_poly(ab.phi_star) == cp * qpoly({1, -2, 1}));
}

TEST_CASE("genus-2 words agree with the twist product", "[group]")
{
    auto ab = abelianized_action(fixtures::genus2());
    CHECK(ab.phi_star == homology_monodromy(2, fixtures::genus2_twists(), {0, 1}));
    auto mt = mapping_torus_presentation(fixtures::genus2());
    CHECK(mt.presentation.generator_count() == 7);
    CHECK(mt.presentation.relators.size() == 7);
}

TEST_CASE("abelianization is functorial under composition", "[group][property]")
{
    auto f = fixtures::figure_eight();
    std::vector<MonodromySpec> pool{f, compose(f, f), fixtures::figure_eight_inverse()};
    for (const auto& a : pool)
        for (const auto& b : pool) {
            auto ab = compose(a, b);
            CHECK_NOTHROW(validate(ab));
            CHECK(abelianized_action(ab).phi_star == abelianized_action(b).phi_star * abelianized_action(a).phi_star);
        }
    CHECK(abelianized_action(compose(f, fixtures::figure_eight_inverse())).phi_star.is_identity());
}

TEST_CASE("transvections", "[group]")
{
    auto omega = standard_omega(2);
    auto t = dehn_twist_transvection({1, 0, 0, 0}, 1, omega);
    CHECK(t.col(0) == std::vector<Rational>{1, 0, 0, 0});
    CHECK(t.col(1) == std::vector<Rational>{-1, 1, 0, 0});
    CHECK(t.col(2) == std::vector<Rational>{0, 0, 1, 0});
    CHECK(t.col(3) == std::vector<Rational>{0, 0, 0, 1});
    CHECK_THROWS_AS(dehn_twist_transvection({0, 0, 0, 0}, 1, omega), math_error);

    std::mt19937 gen(17);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int it = 0; it < 30; ++it) {
        std::vector<Rational> c{d(gen), d(gen), d(gen), d(gen)};
        if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; })) continue;
        auto p = dehn_twist_transvection(c, 1, omega), m = dehn_twist_transvection(c, -1, omega);
        CHECK((p * m).is_identity());
        CHECK(determinant(p) == 1);
        CHECK(p.transpose() * omega * p == omega);
    }
}

TEST_CASE("fox calculus", "[group]")
{
    Matrix<Rational> a(std::vector<std::vector<Rational>>{{2, 1}, {1, 1}});
    Matrix<Rational> b(std::vector<std::vector<Rational>>{{1, 3}, {0, 1}});
    GeneratorAction<Rational> act({a, b});
    auto id = Matrix<Rational>::identity(2, Rational(0));
    CHECK(fox_row(Word::generator(0), act, 2)[0] == id);
    CHECK(fox_row(Word::generator(0, -1), act, 2)[0] == -inverse(a));

    std::mt19937 gen(23);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int it = 0; it < 30; ++it) {
        std::vector<Letter> lu, lv;
        for (int k = 0; k < 6; ++k) lu.push_back({static_cast<std::size_t>(coin(gen) % 2), coin(gen) < 2 ? 1 : -1});
        for (int k = 0; k < 5; ++k) lv.push_back({static_cast<std::size_t>(coin(gen) % 2), coin(gen) < 2 ? 1 : -1});
        Word u(lu), v(lv);
        auto du = fox_row(u, act, 2), dv = fox_row(v, act, 2), duv = fox_row(u * v, act, 2);
        for (std::size_t g = 0; g < 2; ++g) CHECK(duv[g] == du[g] + act.evaluate(u) * dv[g]);
    }
}
