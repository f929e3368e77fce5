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

#ifndef FIBREP_NUMFIELD_POLYNOMIAL_HPP
#define FIBREP_NUMFIELD_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/numfield/rational.hpp"

namespace fibrep {

/// Dense univariate polynomial, coefficients stored low-to-high.
///
/// T is any commutative ring scalar providing is_zero / zero_like / one_like. Division
/// routines additionally need inverse(T). A zero prototype is kept so that polynomials
/// over number fields remember their field even when they are zero.
template <class T>
class Polynomial {
public:
    explicit Polynomial(T zero = T()) : zero_(zero_like(zero)) {}

    Polynomial(std::vector<T> coeffs, T zero) : c_(std::move(coeffs)), zero_(zero_like(zero)) { trim(); }

    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty()) throw math_error("Polynomial: empty coefficient vector needs a zero prototype");
        zero_ = zero_like(c_.front());
        trim();
    }

    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}, c); }

    /// x - r
    static Polynomial linear_root(const T& r)
    {
        return Polynomial(std::vector<T>{-r, one_like(r)}, r);
    }

    const std::vector<T>& coeffs() const noexcept { return c_; }
    const T& zero() const noexcept { return zero_; }

    /// Degree, -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const noexcept { return c_.empty(); }

    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : zero_; }
    const T& leading() const
    {
        if (c_.empty()) throw math_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && is_zero(c_.back() - one_like(zero_)); }

    template <class U>
    U eval(const U& x) const
    {
        U acc = zero_like(x);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + lift(c_[k], x);
        return acc;
    }

    Polynomial derivative() const
    {
        std::vector<T> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
        return Polynomial(std::move(d), zero_);
    }

    /// p(x) -> p(x^2)
    Polynomial substitute_square() const
    {
        std::vector<T> d(c_.empty() ? 0 : 2 * c_.size() - 1, zero_);
        for (std::size_t k = 0; k < c_.size(); ++k) d[2 * k] = c_[k];
        return Polynomial(std::move(d), zero_);
    }

    Polynomial monic() const
    {
        T inv = inverse(leading());
        std::vector<T> d;
        d.reserve(c_.size());
        for (const auto& a : c_) d.push_back(a * inv);
        return Polynomial(std::move(d), zero_);
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<T> d(std::max(a.c_.size(), b.c_.size()), a.zero_);
        for (std::size_t k = 0; k < a.c_.size(); ++k) d[k] = a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) d[k] = d[k] + b.c_[k];
        return Polynomial(std::move(d), a.zero_);
    }
    friend Polynomial operator-(const Polynomial& a)
    {
        std::vector<T> d;
        for (const auto& x : a.c_) d.push_back(-x);
        return Polynomial(std::move(d), a.zero_);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.c_.empty() || b.c_.empty()) return Polynomial(a.zero_);
        std::vector<T> d(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] = d[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(d), a.zero_);
    }
    friend Polynomial operator*(const T& s, const Polynomial& a)
    {
        std::vector<T> d;
        for (const auto& x : a.c_) d.push_back(s * x);
        return Polynomial(std::move(d), a.zero_);
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            if (!is_zero(a.c_[k] - b.c_[k])) return false;
        return true;
    }

    Polynomial pow(unsigned e) const
    {
        Polynomial r = constant(one_like(zero_)), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    std::string to_string(const std::string& var = "x") const
    {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (is_zero(c_[k])) continue;
            if (!first) os << " + ";
            first = false;
            os << '(' << fibrep::to_string(c_[k]) << ')';
            if (k >= 1) os << '*' << var;
            if (k >= 2) os << '^' << k;
        }
        return os.str();
    }

private:
    template <class U>
    static U lift(const T& c, const U& like)
    {
        if constexpr (std::is_same_v<T, U>) {
            (void)like;
            return c;
        } else {
            return one_like(like) * c;
        }
    }

    void trim()
    {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
    T zero_;
};

using QPoly = Polynomial<Rational>;

/// Rational polynomial from integer coefficients, low-to-high.
inline QPoly qpoly(std::initializer_list<long> coeffs)
{
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c), Rational(0));
}

template <class T>
struct PolyDivision {
    Polynomial<T> quotient;
    Polynomial<T> remainder;
};

template <class T>
PolyDivision<T> divmod(const Polynomial<T>& a, const Polynomial<T>& b)
{
    if (b.is_zero_poly()) throw math_error("polynomial division by zero");
    const T& z = a.zero();
    std::vector<T> r = a.coeffs();
    int db = b.degree();
    std::vector<T> q(a.degree() >= db ? a.degree() - db + 1 : 0, z);
    T inv = inverse(b.leading());
    for (int k = a.degree(); k >= db; --k) {
        T f = r[k] * inv;
        q[k - db] = f;
        if (is_zero(f)) continue;
        for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.coeffs()[j];
    }
    return {Polynomial<T>(std::move(q), z), Polynomial<T>(std::move(r), z)};
}

template <class T>
bool divides(const Polynomial<T>& d, const Polynomial<T>& p)
{
    return divmod(p, d).remainder.is_zero_poly();
}

/// Monic gcd (zero if both inputs are zero).
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b)
{
    while (!b.is_zero_poly()) {
        auto r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero_poly() ? a : a.monic();
}

/// Square-free part p / gcd(p, p'), made monic.
template <class T>
Polynomial<T> squarefree_part(const Polynomial<T>& p)
{
    auto g = gcd(p, p.derivative());
    return divmod(p, g).quotient.monic();
}

} // namespace fibrep

#endif
