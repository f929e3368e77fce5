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

#include "fibrep/linalg/charpoly.hpp"
#include "fibrep/linalg/elimination.hpp"
#include "fibrep/linalg/matrix.hpp"
#include "fibrep/numfield/lambda_field.hpp"
#include "oracles.hpp"

using namespace fibrep;

namespace {

Matrix<Rational> random_rational(std::size_t r, std::size_t c, std::mt19937& gen, int zero_bias = 0)
{
    std::uniform_int_distribution<long> num(-6, 6), den(1, 3), z(0, 9);
    Matrix<Rational> m(r, c, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            if (z(gen) < zero_bias) continue;
            Rational q(num(gen), den(gen));
            q.canonicalize();
            m(i, j) = q;
        }
    return m;
}

Matrix<Rational> qmat(std::vector<std::vector<long>> rows)
{
    std::vector<std::vector<Rational>> r;
    for (auto& row : rows) {
        r.emplace_back();
        for (auto x : row) r.back().emplace_back(x);
    }
    return Matrix<Rational>(r);
}

} // namespace

TEST_CASE("kernel bases", "[linalg]")
{
    CHECK(kernel_basis(Matrix<Rational>(2, 2, Rational(0))).size() == 2);
    CHECK(kernel_basis(qmat({{2, 1}, {1, 1}})).empty());
    auto k = kernel_basis(qmat({{1, 1}, {2, 2}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Rational>{Rational(-1), Rational(1)});

    auto L = lambda_field_from_factor(qpoly({1, -5, 1}));
    const auto& K = L.field;
    Matrix<FieldElement> comp(std::vector<std::vector<FieldElement>>{{K->zero(), K->from_rational(-1)},
                                                                     {K->one(), K->from_rational(5)}});
    auto shifted = comp - scale(L.lambda_sq, Matrix<FieldElement>::identity(2, K->zero()));
    auto e = kernel_basis(shifted);
    REQUIRE(e.size() == 1);
    CHECK(is_zero(shifted.apply(e[0])[0]));
    CHECK(is_zero(shifted.apply(e[0])[1]));
}

TEST_CASE("rank-nullity and kernel vectors", "[linalg][property]")
{
    std::mt19937 gen(5);
    for (int it = 0; it < 30; ++it) {
        std::size_t r = 1 + it % 5, c = 1 + (it * 7) % 6;
        auto m = random_rational(r, c, gen, 6);
        auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == c);
        for (const auto& v : k)
            for (const auto& x : m.apply(v)) CHECK(is_zero(x));
    }
}

TEST_CASE("affine solving", "[linalg]")
{
    std::vector<Rational> b{Rational(3), Rational(-1)};
    AffineSolver<Rational> id(Matrix<Rational>::identity(2, Rational(0)));
    CHECK(id.solve(b) == b);
    CHECK(id.kernel_dim() == 0);
    AffineSolver<Rational> zero(Matrix<Rational>(2, 2, Rational(0)));
    CHECK(!zero.solve(b).has_value());
    AffineSolver<Rational> s(qmat({{1, 1}, {2, 2}}));
    auto x = s.solve({Rational(1), Rational(2)});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(s.kernel_dim() == 1);
    CHECK_THROWS_AS(s.solve({Rational(1)}), dimension_error);
}

TEST_CASE("affine solver agrees with direct substitution", "[linalg][property]")
{
    std::mt19937 gen(9);
    for (int it = 0; it < 20; ++it) {
        auto m = random_rational(5, 4, gen, 3);
        auto xs = random_rational(4, 1, gen).col(0);
        auto b = m.apply(xs);
        AffineSolver<Rational> s(m);
        auto x = s.solve(b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("determinant and inverse", "[linalg]")
{
    auto m = qmat({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    CHECK(determinant(m) == 18);
    CHECK((m * inverse(m)).is_identity());
    CHECK_THROWS_AS(inverse(qmat({{1, 2}, {2, 4}})), math_error);
}

TEST_CASE("characteristic polynomials", "[linalg]")
{
    CHECK(char_poly(Matrix<Rational>::identity(2, Rational(0))) == qpoly({1, -2, 1}));
    CHECK(char_poly(qmat({{0, -1}, {1, 5}})) == qpoly({1, -5, 1}));
    CHECK_THROWS_AS(char_poly(Matrix<Rational>(2, 3, Rational(0))), dimension_error);
    auto p = qpoly({1, -5, 1}) * qpoly({1, -3, 1});
    CHECK(simple_factor_check(p, qpoly({1, -5, 1})));
    CHECK(!simple_factor_check(qpoly({1, -2, 1}), qpoly({-1, 1})));
    CHECK(!simple_factor_check(qpoly({1, -3, 1}), qpoly({-2, 1})));
    CHECK_THROWS_AS(simple_factor_check(p, qpoly({2, 2})), math_error);
}

TEST_CASE("char_poly: Cayley-Hamilton, similarity, independent oracle", "[linalg][property]")
{
    std::mt19937 gen(13);
    for (int it = 0; it < 25; ++it) {
        std::size_t n = 1 + it % 6;
        auto a = random_rational(n, n, gen, it % 4);
        auto p = char_poly(a);
        CHECK(p.degree() == static_cast<int>(n));
        CHECK(p.is_monic());
        CHECK(p == oracle::faddeev_leverrier(a));
        CHECK(oracle::eval_at_matrix(p, a).is_zero());
        Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
        CHECK(determinant(a) == sign * p.coeff(0));
        auto q = random_rational(n, n, gen);
        if (is_zero(determinant(q))) continue;
        CHECK(char_poly(q * a * inverse(q)) == p);
    }
}

TEST_CASE("incremental span", "[linalg]")
{
    IncrementalBasis<Rational> b(3);
    CHECK(b.add({Rational(1), Rational(2), Rational(0)}));
    CHECK(!b.add({Rational(2), Rational(4), Rational(0)}));
    CHECK(b.add({Rational(0), Rational(1), Rational(1)}));
    CHECK(b.contains({Rational(1), Rational(3), Rational(1)}));
    CHECK(!b.contains({Rational(0), Rational(0), Rational(1)}));
    CHECK(b.add({Rational(0), Rational(0), Rational(1)}));
    CHECK(b.full());
}
