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

#include "fibrep/cohomology/twisted.hpp"
#include "fixtures.hpp"

using namespace fibrep;

TEST_CASE("trivial coefficients on Z^2", "[cohomology]")
{
    auto t = fixtures::torus_rep(Rational(2), Rational(3));
    Rep<Rational> triv = transform_rep(t, [](const Matrix<Rational>&) { return Matrix<Rational>::identity(1, Rational(0)); });
    auto c = z1_space(triv);
    CHECK(c.z1 == 2);
    CHECK(c.h0 == 1);
    CHECK(c.h1 == 2);
}

TEST_CASE("torus cohomology with hyperbolic diagonal coefficients", "[cohomology]")
{
    auto t = fixtures::torus_rep(Rational(2), Rational(3));
    for (std::size_t n = 2; n <= 4; ++n) {
        auto ad = adjoint_action(compose_r_n(t, n));
        auto d = cohomology_dims(ad);
        CHECK(d.h1 == 2 * (n - 1));
        CHECK(d.h0 == n - 1);
        CHECK(d.b1 == n * n - 1 - d.h0);
    }
}

TEST_CASE("h0 of sl(2) for rho_lambda vanishes", "[cohomology]")
{
    auto s = fixtures::genus2_rho(qpoly({1, -3, 1}));
    CHECK(h0_dim(adjoint_action(s.rho)) == 0);
    auto triv = module_C(s.L.field->one(), s.torus.presentation, s.torus.weight);
    CHECK(h0_dim(triv) == 1);
}

TEST_CASE("genus-2 sl(2) cocycles", "[cohomology]")
{
    for (auto q : {qpoly({1, -3, 1}), qpoly({1, -5, 1})}) {
        auto s = fixtures::genus2_rho(q);
        auto ad = adjoint_action(s.rho);
        auto c = z1_space(ad);
        CHECK(c.z1 == 5);
        CHECK(c.h0 == 0);
        CHECK(c.b1 == 3);
        CHECK(c.h1 == 2);
        auto J = cocycle_system(ad);
        for (const auto& v : c.basis)
            for (const auto& x : J.apply(v)) CHECK(x.is_zero());
    }
}

TEST_CASE("coboundaries are cocycles", "[cohomology][property]")
{
    std::mt19937 gen(41);
    std::uniform_int_distribution<long> num(-5, 5);
    auto s = fixtures::genus2_rho(qpoly({1, -3, 1}));
    for (std::size_t n = 2; n <= 3; ++n) {
        auto ad = adjoint_action(compose_r_n(s.rho, n));
        auto J = cocycle_system(ad);
        for (int it = 0; it < 5; ++it) {
            std::vector<FieldElement> u;
            for (std::size_t k = 0; k < ad.degree(); ++k) u.push_back(s.L.field->element({Rational(num(gen)), Rational(num(gen))}));
            for (const auto& x : J.apply(coboundary_vector(ad, u))) CHECK(x.is_zero());
        }
        CHECK(coboundary_basis(ad).size() == ad.degree() - h0_dim(ad));
    }
}

TEST_CASE("h1 is invariant under conjugating the module", "[cohomology][property]")
{
    auto s = fixtures::figure_eight();
    auto f = fixtures::lambda_setup(s, qpoly({1, -3, 1}));
    auto ad = adjoint_action(f.rho);
    const auto K = f.L.field;
    Matrix<FieldElement> P(std::vector<std::vector<FieldElement>>{
        {K->one(), K->generator(), K->zero()}, {K->zero(), K->one(), K->from_rational(2)}, {K->one(), K->zero(), K->from_rational(3)}});
    auto Pi = inverse(P);
    auto conj = transform_rep(ad, [&](const Matrix<FieldElement>& g) { return P * g * Pi; });
    CHECK(h1_dim(conj) == h1_dim(ad));
    CHECK(h1_dim(ad) == 1);
}

TEST_CASE("the explicit n = 2 system", "[cohomology]")
{
    for (auto q : {qpoly({1, -3, 1}), qpoly({1, -5, 1})}) {
        auto s = fixtures::genus2_rho(q);
        auto sm = s_matrix_n2(s.rho, s.ab.phi_star, s.eig);
        CHECK(sm.nullity == 2 + s.ab.k);
        CHECK(sm.diagonal_blocks_match);
        CHECK(sm.lower_blocks_zero);
        CHECK(sm.y0_column_matches);
        CHECK(sm.eigenvector_in_kernel);
        CHECK(sm.nullity_with_surface_row == sm.nullity - 1);
        auto c = z1_space(adjoint_action(s.rho));
        CHECK(c.z1 == sm.nullity_with_surface_row + 2);
        CHECK(c.h1 == sm.nullity_with_surface_row - 1);
    }
}

TEST_CASE("explicit coboundaries span B^1", "[cohomology]")
{
    auto s = fixtures::genus2_rho(qpoly({1, -5, 1}));
    auto ad = adjoint_action(s.rho);
    auto generic = coboundary_basis(ad);
    auto expl = explicit_coboundaries_n2(s.eig);
    IncrementalBasis<FieldElement> a(generic.front().size()), b(generic.front().size());
    for (const auto& v : generic) a.add(v);
    for (const auto& v : expl) b.add(v);
    CHECK(a.dim() == b.dim());
    for (const auto& v : expl) CHECK(a.contains(v));
}

TEST_CASE("C_alpha away from eigenvalues has no H^1", "[cohomology]")
{
    auto s = fixtures::genus2_rho(qpoly({1, -3, 1}));
    auto alpha = s.eig.lambda.pow(3);
    CHECK(h1_dim(module_C(alpha, s.torus.presentation, s.torus.weight)) == 0);
}

TEST_CASE("induction between R_{n-1} and R_{n-3}", "[cohomology]")
{
    auto s = fixtures::genus2_rho(qpoly({1, -3, 1}));
    auto r4 = induction_check(s.rho, s.ab.phi_star, s.eig, 4);
    CHECK(r4.hypotheses_hold);
    CHECK(r4.equal);
    CHECK(r4.h1_upper == 0);
    auto r3 = induction_check(s.rho, s.ab.phi_star, s.eig, 3);
    CHECK(!r3.lambda_power_not_eigenvalue);
    CHECK(r3.h1_upper == 2);
    CHECK(h1_dim(module_R(2, s.rho)) == h1_dim(adjoint_action(s.rho)));
}
