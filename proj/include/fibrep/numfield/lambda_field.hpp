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

#ifndef FIBREP_NUMFIELD_LAMBDA_FIELD_HPP
#define FIBREP_NUMFIELD_LAMBDA_FIELD_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/numfield/embedding.hpp"
#include "fibrep/numfield/number_field.hpp"
#include "fibrep/numfield/polynomial.hpp"

namespace fibrep {

namespace detail {

inline Integer denominator_lcm(const QPoly& p)
{
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

/// Monic p(x) -> D^d p(x/D), which has integer coefficients.
inline QPoly integral_rescale(const QPoly& monic_p, const Integer& D)
{
    const int d = monic_p.degree();
    std::vector<Rational> c;
    Integer pw = 1;
    std::vector<Integer> powers(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        powers[static_cast<std::size_t>(k)] = pw;
        pw *= D;
    }
    for (int k = 0; k <= d; ++k)
        c.push_back(monic_p.coeff(static_cast<std::size_t>(k)) * Rational(powers[static_cast<std::size_t>(d - k)]));
    return QPoly(std::move(c), Rational(0));
}

/// F(x) -> F(D x) / D^e, monic of degree e.
inline QPoly undo_rescale(const QPoly& F, const Integer& D)
{
    const int e = F.degree();
    std::vector<Rational> c;
    Rational pw = 1;
    for (int k = 0; k <= e; ++k) {
        c.push_back(F.coeff(static_cast<std::size_t>(k)) * pw);
        pw *= Rational(D);
    }
    QPoly f(std::move(c), Rational(0));
    return f.monic();
}

inline ComplexBall ball_sub(const ComplexBall& a, const ComplexBall& b)
{
    return ComplexBall{a.center - b.center, a.radius + b.radius};
}

/// Rounds each coefficient ball of prod(x - r) to an integer; nullopt when a ball is too wide.
inline std::optional<QPoly> round_subset_product(const std::vector<ComplexBall>& roots, const std::vector<std::size_t>& subset)
{
    const mpfr_prec_t prec = roots.front().radius.prec();
    std::vector<ComplexBall> c{ComplexBall{numeric::Complex(numeric::Real(1L, prec), numeric::Real(prec)), numeric::Real(prec)}};
    for (auto idx : subset) {
        std::vector<ComplexBall> next(c.size() + 1, ComplexBall{numeric::Complex(prec), numeric::Real(prec)});
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] = next[k + 1] + c[k];
            next[k] = ball_sub(next[k], roots[idx] * c[k]);
        }
        c = std::move(next);
    }
    const numeric::Real quarter = numeric::Real::pow2(-2, prec);
    std::vector<Rational> out;
    for (const auto& b : c) {
        if (!(b.radius < quarter)) return std::nullopt;
        Integer z;
        mpfr_get_z(z.get_mpz_t(), b.center.re.raw(), MPFR_RNDN);
        out.emplace_back(z);
    }
    return QPoly(std::move(out), Rational(0));
}

} // namespace detail

/// Minimal polynomial over Q of the root with index `root_index` (certified_roots order)
/// of a monic squarefree rational polynomial. Searches subsets of numerically certified
/// roots whose product rounds to an integer polynomial and confirms by exact division.
inline QPoly minimal_polynomial_of_root(const QPoly& p, std::size_t root_index, int digits = 40)
{
    const QPoly m = p.monic();
    const int d = m.degree();
    if (d < 1) throw math_error("minimal_polynomial_of_root: constant polynomial");
    if (d > 16) throw math_error("minimal_polynomial_of_root: degree " + std::to_string(d) + " exceeds the search limit 16");
    if (gcd(m, m.derivative()).degree() > 0) throw math_error("minimal_polynomial_of_root: polynomial is not squarefree");
    const Integer D = detail::denominator_lcm(m);
    const QPoly P = detail::integral_rescale(m, D);
    for (int attempt = 0; attempt < 4; ++attempt, digits *= 2) {
        const auto roots = certified_roots(P, digits);
        if (root_index >= roots.size()) throw math_error("minimal_polynomial_of_root: root index out of range");
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (i != root_index) others.push_back(i);
        bool too_wide = false;
        for (std::size_t size = 0; size + 1 <= static_cast<std::size_t>(d); ++size) {
            // subsets of `others` of the given size, lexicographic
            std::vector<std::size_t> pick(size);
            for (std::size_t i = 0; i < size; ++i) pick[i] = i;
            for (;;) {
                std::vector<std::size_t> subset{root_index};
                for (auto i : pick) subset.push_back(others[i]);
                auto F = detail::round_subset_product(roots, subset);
                if (!F) too_wide = true;
                else if (divides(*F, P)) return detail::undo_rescale(*F, D);
                std::size_t i = size;
                while (i > 0 && pick[i - 1] == others.size() - size + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        if (!too_wide) break;
    }
    throw indeterminate_error("minimal_polynomial_of_root: factor search inconclusive for " + p.to_string());
}

/// Exact irreducibility over Q for degrees up to 8.
inline bool is_irreducible(const QPoly& p)
{
    if (p.degree() < 1) return false;
    if (p.degree() == 1) return true;
    if (p.degree() > 8) throw math_error("is_irreducible: degree above 8 needs an asserted irreducibility flag");
    const QPoly m = p.monic();
    if (gcd(m, m.derivative()).degree() > 0) return false;
    return minimal_polynomial_of_root(m, 0).degree() == m.degree();
}

struct LambdaField {
    QPoly q_sq;
    QPoly modulus;
    FieldPtr field;
    FieldElement lambda;
    FieldElement lambda_sq;
};

struct LambdaFieldOptions {
    std::optional<QPoly> modulus;      // user-supplied minimal polynomial of lambda
    bool assert_irreducible = false;  // trust q_sq (and the modulus) without testing
};

/// Field generated by a square root lambda of a root of q_sq. Without a user modulus the
/// minimal polynomial of the root of q_sq(y^2) with largest real part is used.
inline LambdaField lambda_field_from_factor(const QPoly& q_sq, const LambdaFieldOptions& opt = {})
{
    if (q_sq.degree() < 1) throw math_error("lambda_field_from_factor: factor must be nonconstant");
    if (!q_sq.is_monic()) throw math_error("lambda_field_from_factor: factor must be monic");
    if (!opt.assert_irreducible) {
        if (q_sq.degree() > 8)
            throw math_error("lambda_field_from_factor: irreducibility of a degree " + std::to_string(q_sq.degree()) +
                             " factor must be asserted");
        if (!is_irreducible(q_sq)) throw math_error("lambda_field_from_factor: factor " + q_sq.to_string() + " is reducible");
    }
    const QPoly Q = q_sq.substitute_square();
    QPoly modulus;
    if (opt.modulus) {
        modulus = *opt.modulus;
        if (!modulus.is_monic()) throw math_error("lambda_field_from_factor: supplied modulus must be monic");
        if (!divides(modulus, Q))
            throw math_error("lambda_field_from_factor: supplied modulus does not divide " + Q.to_string("y"));
        if (!opt.assert_irreducible) {
            if (modulus.degree() > 8) throw math_error("lambda_field_from_factor: irreducibility of the supplied modulus must be asserted");
            if (!is_irreducible(modulus)) throw math_error("lambda_field_from_factor: supplied modulus is reducible");
        }
    } else {
        if (Q.degree() > 16)
            throw math_error("lambda_field_from_factor: " + Q.to_string("y") + " resists the factor search; supply an explicit modulus");
        try {
            modulus = minimal_polynomial_of_root(Q, 0);
        } catch (const error& e) {
            throw math_error(std::string("lambda_field_from_factor: factor search failed (") + e.what() +
                             "); supply an explicit modulus");
        }
    }
    LambdaField out;
    out.q_sq = q_sq;
    out.modulus = modulus;
    out.field = NumberField::make(modulus, "y");
    out.lambda = out.field->generator();
    out.lambda_sq = out.lambda * out.lambda;
    if (!is_zero(to_field_poly(q_sq, out.field).eval(out.lambda_sq)))
        throw math_error("lambda_field_from_factor: q_sq(lambda^2) != 0");
    return out;
}

} // namespace fibrep

#endif
