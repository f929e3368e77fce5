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

#ifndef FIBREP_NUMFIELD_EMBEDDING_HPP
#define FIBREP_NUMFIELD_EMBEDDING_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/numfield/mpreal.hpp"
#include "fibrep/numfield/number_field.hpp"
#include "fibrep/numfield/polynomial.hpp"

namespace fibrep {

/// Closed disc in C: every value the ball claims to enclose lies within `radius` of `center`.
struct ComplexBall {
    numeric::Complex center;
    numeric::Real radius;

    std::complex<double> approx() const { return center.to_std(); }

    /// True if this ball lies inside `outer`.
    bool inside(const ComplexBall& outer) const
    {
        numeric::Real d = abs(center - outer.center);
        return !(outer.radius < d + radius);
    }

    std::string str(int digits) const
    {
        std::string s = center.re.str(digits);
        if (!center.im.is_zero()) s += (center.im < numeric::Real(0L, 2) ? " - " : " + ") + abs(center.im).str(digits) + "i";
        return s + " +/- " + radius.str(3);
    }
};

inline ComplexBall operator*(const ComplexBall& a, const ComplexBall& b)
{
    // |ab - a0 b0| <= |a0| rb + |b0| ra + ra rb
    ComplexBall r{a.center * b.center, numeric::Real(a.radius.prec())};
    r.radius = abs(a.center) * b.radius + abs(b.center) * a.radius + a.radius * b.radius;
    return r;
}

inline ComplexBall operator+(const ComplexBall& a, const ComplexBall& b)
{
    return ComplexBall{a.center + b.center, a.radius + b.radius};
}

/// Widens a ball by `extra`.
inline ComplexBall widen(ComplexBall b, const numeric::Real& extra)
{
    b.radius = b.radius + extra;
    return b;
}

namespace detail {

inline mpfr_prec_t bits_for_digits(int digits) { return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 64; }

inline std::vector<numeric::Complex> to_complex_coeffs(const QPoly& p, mpfr_prec_t prec)
{
    std::vector<numeric::Complex> c;
    for (const auto& q : p.coeffs()) c.push_back({numeric::Real(q, prec), numeric::Real(prec)});
    return c;
}

inline numeric::Complex horner(const std::vector<numeric::Complex>& c, const numeric::Complex& z)
{
    numeric::Complex acc(z.re.prec());
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

/// Taylor coefficients of the polynomial at z, i.e. f(z + d) = sum t_k d^k.
inline std::vector<numeric::Complex> taylor_shift(std::vector<numeric::Complex> c, const numeric::Complex& z)
{
    const std::size_t n = c.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j > k; --j) c[j - 1] = c[j - 1] + z * c[j];
    return c;
}

} // namespace detail

/// Numerically isolated roots of a squarefree rational polynomial, each enclosed in a
/// certified disc containing exactly one root.
///
/// Order: decreasing real part, ties broken by decreasing imaginary part. Root index k of
/// a number field modulus is the embedding sending y to the k-th root in this order.
inline std::vector<ComplexBall> certified_roots(const QPoly& poly, int digits)
{
    using numeric::Complex;
    using numeric::Real;
    if (poly.degree() < 1) throw math_error("certified_roots: polynomial of degree < 1");
    const QPoly p = poly.monic();
    const int d = p.degree();
    if (d == 1) {
        bool exact = false;
        mpfr_prec_t prec = detail::bits_for_digits(digits);
        Real r(Rational(-p.coeffs()[0]), prec, exact);
        return {ComplexBall{Complex(r, Real(prec)), exact ? Real(prec) : Real::pow2(-(prec - 4), prec)}};
    }
    for (mpfr_prec_t prec = detail::bits_for_digits(digits); prec <= 16 * detail::bits_for_digits(digits); prec *= 2) {
        const auto c = detail::to_complex_coeffs(p, prec);
        std::vector<Complex> dc;
        for (std::size_t k = 1; k < c.size(); ++k) dc.push_back(Real(static_cast<long>(k), prec) * c[k]);

        double bound = 1.0;
        for (const auto& q : p.coeffs()) bound = std::max(bound, 1.0 + std::abs(q.get_d()));
        std::vector<Complex> z;
        for (int k = 0; k < d; ++k) {
            double ang = 2.0 * std::numbers::pi * k / d + 0.4;
            z.push_back({Real(bound * 0.5 * std::cos(ang), prec), Real(bound * 0.5 * std::sin(ang), prec)});
        }
        const Real tol = Real::pow2(-(prec - 16), prec);
        // Aberth-Ehrlich iteration
        for (int it = 0; it < 2000; ++it) {
            Real worst(prec);
            for (int i = 0; i < d; ++i) {
                Complex pz = detail::horner(c, z[i]);
                Complex dpz = detail::horner(dc, z[i]);
                if (abs(dpz).is_zero()) continue;
                Complex ratio = pz / dpz;
                Complex sum(prec);
                for (int j = 0; j < d; ++j)
                    if (j != i) sum = sum + Complex(Real(1L, prec), Real(prec)) / (z[i] - z[j]);
                Complex w = ratio / (Complex(Real(1L, prec), Real(prec)) - ratio * sum);
                z[i] = z[i] - w;
                worst = max(worst, abs(w));
            }
            if (worst < tol) break;
        }
        // Weierstrass inclusion discs: D(z_i, d|p(z_i) / prod_{j!=i}(z_i - z_j)|)
        std::vector<ComplexBall> balls;
        const Real slack = Real::pow2(-(prec - 32), prec);
        for (int i = 0; i < d; ++i) {
            Complex den(Real(1L, prec), Real(prec));
            for (int j = 0; j < d; ++j)
                if (j != i) den = den * (z[i] - z[j]);
            Real rad = Real(static_cast<long>(2 * d), prec) * abs(detail::horner(c, z[i])) / abs(den) + slack;
            balls.push_back({z[i], rad});
        }
        bool separated = true;
        for (int i = 0; i < d && separated; ++i)
            for (int j = i + 1; j < d; ++j)
                if (!(balls[i].radius + balls[j].radius < abs(balls[i].center - balls[j].center))) {
                    separated = false;
                    break;
                }
        const Real target = Real(Rational(Integer(1), Integer(10)) , prec);
        Real want(1L, prec);
        for (int k = 0; k < digits; ++k) want = want * target;
        bool fine = std::all_of(balls.begin(), balls.end(), [&](const ComplexBall& b) { return b.radius < want; });
        if (!separated || !fine) continue;
        for (auto& b : balls) {
            // snap tiny imaginary parts of real roots when the disc straddles the axis cleanly
            if (abs(b.center.im) < b.radius) {
                bool lone = true;
                for (const auto& o : balls)
                    if (&o != &b && abs(o.center.re - b.center.re) < o.radius + b.radius) lone = false;
                if (lone) {
                    b.radius = b.radius + abs(b.center.im);
                    b.center.im = Real(prec);
                }
            }
        }
        std::sort(balls.begin(), balls.end(), [](const ComplexBall& a, const ComplexBall& b) {
            Real gap = abs(a.center.re - b.center.re);
            if (a.radius + b.radius < gap) return b.center.re < a.center.re;
            return b.center.im < a.center.im;
        });
        return balls;
    }
    throw indeterminate_error("certified_roots: could not separate the roots of " + poly.to_string());
}

/// Ball enclosing the image of `a` under the embedding y -> root[root_choice].
inline ComplexBall embed_numeric(const FieldElement& a, std::size_t root_choice, int digits = 50)
{
    using numeric::Complex;
    using numeric::Real;
    const auto& field = *a.field();
    if (root_choice >= static_cast<std::size_t>(field.degree()))
        throw math_error("embed_numeric: root index " + std::to_string(root_choice) + " out of range for degree " +
                         std::to_string(field.degree()));
    mpfr_prec_t prec = detail::bits_for_digits(digits);
    if (a.is_rational()) {
        bool exact = false;
        Real c(a.as_rational(), prec, exact);
        return {Complex(c, Real(prec)), exact ? Real(prec) : Real::pow2(-(prec - 4), prec)};
    }
    auto roots = certified_roots(field.modulus(), digits + 10);
    const ComplexBall& root = roots[root_choice];
    prec = std::max(prec, root.center.re.prec());
    QPoly f(a.coeffs(), Rational(0));
    auto coeffs = detail::to_complex_coeffs(f, prec);
    auto taylor = detail::taylor_shift(coeffs, root.center);
    Real rad(prec), rk(1L, prec), mag(prec);
    for (std::size_t k = 1; k < taylor.size(); ++k) {
        rk = rk * root.radius;
        rad = rad + abs(taylor[k]) * rk;
    }
    Real zr = abs(root.center) + root.radius, zk(1L, prec);
    for (const auto& q : a.coeffs()) {
        mag = mag + abs(Real(q, prec)) * zk;
        zk = zk * zr;
    }
    rad = rad + Real::pow2(-(prec - 32), prec) * (mag + Real(1L, prec));
    return {taylor[0], rad};
}

enum class Tristate { yes, no, indeterminate };

inline std::string to_string(Tristate t)
{
    switch (t) {
    case Tristate::yes: return "true";
    case Tristate::no: return "false";
    default: return "indeterminate";
    }
}

/// Decides |a| != 1 under the chosen embedding, refining precision until the enclosing
/// ball avoids the unit circle or `max_refinements` doublings are exhausted.
inline Tristate modulus_not_one(const FieldElement& a, std::size_t root_choice, int digits = 50, int max_refinements = 4)
{
    for (int r = 0; r <= max_refinements; ++r, digits *= 2) {
        ComplexBall b = embed_numeric(a, root_choice, digits);
        numeric::Real m = abs(b.center);
        numeric::Real one(1L, m.prec());
        if (one < m - b.radius || m + b.radius < one) return Tristate::yes;
        if (b.radius.is_zero() && !(m < one) && !(one < m)) return Tristate::no;
    }
    return Tristate::indeterminate;
}

} // namespace fibrep

#endif
