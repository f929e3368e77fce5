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

#include "fibrep/numfield/embedding.hpp"
#include "fibrep/numfield/jet.hpp"
#include "fibrep/numfield/lambda_field.hpp"
#include "fibrep/numfield/number_field.hpp"
#include "fibrep/numfield/polynomial.hpp"
#include "fibrep/numfield/rational.hpp"

using namespace fibrep;

namespace {

FieldElement random_element(const FieldPtr& K, std::mt19937& gen)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::vector<Rational> c;
    for (int k = 0; k < K->degree(); ++k) c.emplace_back(num(gen), den(gen));
    for (auto& x : c) x.canonicalize();
    return K->element(c);
}

} // namespace

TEST_CASE("rationals stay canonical", "[numfield]")
{
    Rational a = parse_rational("-6/4");
    CHECK(a == Rational(-3, 2));
    CHECK(a.get_den() == 2);
    CHECK(parse_rational("2/3") + parse_rational("1/6") == Rational(5, 6));
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("1.5"), parse_error);
    CHECK_THROWS_AS(inverse(Rational(0)), math_error);
}

TEST_CASE("arithmetic in Q[y]/(y^2-21)", "[numfield]")
{
    auto K = NumberField::make(qpoly({-21, 0, 1}));
    auto y = K->generator();
    auto half = Rational(1, 2);
    auto u = (K->from_rational(5) + y) * half;
    auto v = (K->from_rational(5) - y) * half;
    CHECK(u * v == K->one());
    CHECK(K->one() / u == v);
    CHECK_THROWS_AS(u / K->zero(), math_error);
    auto L = NumberField::make(qpoly({-1, -1, 1}));
    CHECK_THROWS_AS(u + L->one(), math_error);
}

TEST_CASE("field axioms on random elements", "[numfield][property]")
{
    std::mt19937 gen(7);
    for (auto q : {qpoly({-1, -1, 1}), qpoly({1, 0, -5, 0, 1}), qpoly({-2, 0, 0, 1})}) {
        auto K = NumberField::make(q);
        for (int it = 0; it < 40; ++it) {
            auto a = random_element(K, gen), b = random_element(K, gen), c = random_element(K, gen);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == K->one());
        }
    }
}

TEST_CASE("reducible modulus surfaces as a zero divisor", "[numfield]")
{
    auto K = NumberField::make(qpoly({-1, 0, 1}));
    auto z = K->generator() - K->one();
    CHECK_THROWS_AS(z.inverse(), math_error);
}

TEST_CASE("lambda fields", "[numfield]")
{
    SECTION("x^2-3x+1 gives the golden field")
    {
        auto L = lambda_field_from_factor(qpoly({1, -3, 1}));
        CHECK(L.modulus == qpoly({-1, -1, 1}));
        CHECK(L.lambda_sq == L.lambda + L.field->one());
    }
    SECTION("x^2-5x+1 needs the full quartic")
    {
        auto L = lambda_field_from_factor(qpoly({1, -5, 1}));
        CHECK(L.modulus == qpoly({1, 0, -5, 0, 1}));
        CHECK(L.field->degree() == 4);
        auto q = to_field_poly(L.q_sq, L.field);
        CHECK(is_zero(q.eval(L.lambda_sq)));
    }
    SECTION("rational square root")
    {
        auto L = lambda_field_from_factor(qpoly({-4, 1}));
        CHECK(L.modulus == qpoly({-2, 1}));
        CHECK(L.lambda.is_rational());
        CHECK(L.lambda.as_rational() == 2);
    }
    SECTION("non-integral coefficients")
    {
        std::vector<Rational> c{Rational(1, 4), Rational(-5, 2), Rational(1)};
        auto L = lambda_field_from_factor(QPoly(c, Rational(0)));
        CHECK(divides(L.modulus, L.q_sq.substitute_square()));
        CHECK(is_zero(to_field_poly(L.q_sq, L.field).eval(L.lambda_sq)));
    }
    SECTION("reducible factor is rejected")
    {
        CHECK_THROWS_AS(lambda_field_from_factor(qpoly({2, -3, 1})), math_error);
    }
    SECTION("user modulus must divide q_sq(y^2)")
    {
        LambdaFieldOptions opt;
        opt.modulus = qpoly({1, -1, 1});
        CHECK_THROWS_AS(lambda_field_from_factor(qpoly({1, -3, 1}), opt), math_error);
        opt.modulus = qpoly({-1, 1, 1});
        auto L = lambda_field_from_factor(qpoly({1, -3, 1}), opt);
        CHECK(L.modulus == qpoly({-1, 1, 1}));
    }
}

TEST_CASE("irreducibility search", "[numfield]")
{
    CHECK(is_irreducible(qpoly({1, 0, -5, 0, 1})));
    CHECK(!is_irreducible(qpoly({1, 0, -3, 0, 1})));
    CHECK(!is_irreducible(qpoly({1, 0, 0, 0, 4})));  // x^4+4 = (x^2+2x+2)(x^2-2x+2)
    CHECK(is_irreducible(qpoly({-2, 0, 0, 1})));
    CHECK(!is_irreducible((qpoly({1, 1, 1}) * qpoly({-3, 0, 0, 1}))));
    CHECK(is_irreducible(qpoly({1, 1, 1, 1, 1, 1, 1})));
}

TEST_CASE("numeric embeddings", "[numfield]")
{
    auto K = NumberField::make(qpoly({-21, 0, 1}));
    auto b = embed_numeric(K->generator(), 0, 30);
    CHECK(b.approx().real() == Catch::Approx(4.58257569495584));
    CHECK(b.radius.to_double() < 1e-30);
    CHECK(embed_numeric(K->generator(), 1, 30).approx().real() == Catch::Approx(-4.58257569495584));
    auto three_halves = embed_numeric(K->from_rational(Rational(3, 2)), 0);
    CHECK(three_halves.radius.is_zero());
    CHECK(three_halves.approx().real() == 1.5);
    CHECK_THROWS_AS(embed_numeric(K->generator(), 2), math_error);

    auto G = NumberField::make(qpoly({-1, -1, 1}));
    CHECK(embed_numeric(G->generator(), 0).approx().real() == Catch::Approx(1.6180339887498949));
    CHECK(modulus_not_one(G->generator(), 0) == Tristate::yes);
    CHECK(modulus_not_one(G->one(), 0) == Tristate::no);
}

TEST_CASE("embeddings respect products", "[numfield][property]")
{
    std::mt19937 gen(11);
    auto K = NumberField::make(qpoly({1, 0, -5, 0, 1}));
    for (int it = 0; it < 10; ++it) {
        auto a = random_element(K, gen), b = random_element(K, gen);
        for (std::size_t r = 0; r < 4; ++r) {
            auto ea = embed_numeric(a, r, 30), eb = embed_numeric(b, r, 30);
            auto eab = embed_numeric(a * b, r, 30);
            auto prod = widen(ea * eb, numeric::Real::pow2(-90, 200));
            CHECK(eab.inside(widen(prod, eab.radius + eab.radius)));
        }
    }
}

TEST_CASE("jets", "[numfield]")
{
    auto K = NumberField::make(qpoly({-1, -1, 1}));
    auto one = Jet<FieldElement>::constant(K->one(), 2);
    auto t = Jet<FieldElement>::variable(2, K->one());
    CHECK((one + t) * (one - t) == one);
    CHECK_THROWS_AS(one + Jet<FieldElement>::constant(K->one(), 3), math_error);
    auto j3 = Jet<FieldElement>::constant(K->one(), 3) + Jet<FieldElement>::variable(3, K->one());
    CHECK(j3 * j3.inverse() == Jet<FieldElement>::constant(K->one(), 3));
    CHECK_THROWS_AS(Jet<FieldElement>::variable(3, K->one()).inverse(), math_error);
}

TEST_CASE("jet products match truncated polynomial products", "[numfield][property]")
{
    std::mt19937 gen(3);
    auto K = NumberField::make(qpoly({1, 0, -5, 0, 1}));
    for (int it = 0; it < 20; ++it) {
        std::vector<FieldElement> a, b;
        for (int k = 0; k < 4; ++k) {
            a.push_back(random_element(K, gen));
            b.push_back(random_element(K, gen));
        }
        auto pa = Polynomial<FieldElement>(a, K->zero()), pb = Polynomial<FieldElement>(b, K->zero());
        auto prod = pa * pb;
        auto j = Jet<FieldElement>(a) * Jet<FieldElement>(b);
        for (std::size_t k = 0; k < 4; ++k) CHECK(j[k] == prod.coeff(k));
    }
}
