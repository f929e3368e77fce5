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

#ifndef FIBREP_NUMFIELD_NUMBER_FIELD_HPP
#define FIBREP_NUMFIELD_NUMBER_FIELD_HPP

#include <cstddef>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/numfield/polynomial.hpp"
#include "fibrep/numfield/rational.hpp"

namespace fibrep {

class FieldElement;

/// Simple extension Q[y]/(q(y)) with q monic; degree 1 is Q itself.
///
/// Irreducibility of q is the caller's responsibility (see lambda_field.hpp); a
/// reducible modulus surfaces as a math_error the first time a zero divisor is inverted.
class NumberField : public std::enable_shared_from_this<NumberField> {
    struct Private {};

public:
    NumberField(Private, QPoly modulus, std::string label) : modulus_(std::move(modulus)), label_(std::move(label))
    {
        if (modulus_.degree() < 1) throw math_error("number field modulus must have degree >= 1");
        if (!modulus_.is_monic()) throw math_error("number field modulus must be monic");
        const int d = degree();
        // y^k mod q for k = 0 .. 2d-2
        reduction_.assign(2 * d - 1, std::vector<Rational>(d, Rational(0)));
        for (int k = 0; k < d; ++k) reduction_[k][k] = 1;
        for (int k = d; k < 2 * d - 1; ++k) {
            const auto& prev = reduction_[k - 1];
            auto& cur = reduction_[k];
            Rational top = prev[d - 1];
            for (int j = d - 1; j >= 1; --j) cur[j] = prev[j - 1];
            cur[0] = 0;
            if (sgn(top) != 0)
                for (int j = 0; j < d; ++j) cur[j] -= top * modulus_.coeffs()[j];
        }
    }

    static std::shared_ptr<const NumberField> make(QPoly modulus, std::string label = "y")
    {
        return std::make_shared<const NumberField>(Private{}, std::move(modulus), std::move(label));
    }

    static std::shared_ptr<const NumberField> rationals()
    {
        static const auto q = make(qpoly({0, 1}), "y");
        return q;
    }

    const QPoly& modulus() const noexcept { return modulus_; }
    int degree() const noexcept { return modulus_.degree(); }
    const std::string& label() const noexcept { return label_; }
    bool is_rational_field() const noexcept { return degree() == 1; }

    const std::vector<std::vector<Rational>>& reduction_table() const noexcept { return reduction_; }

    bool same_as(const NumberField& other) const noexcept
    {
        return this == &other || modulus_ == other.modulus_;
    }

    FieldElement element(std::vector<Rational> coeffs) const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement zero() const;
    FieldElement one() const;
    /// Residue class of y.
    FieldElement generator() const;

private:
    QPoly modulus_;
    std::string label_;
    std::vector<std::vector<Rational>> reduction_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a NumberField, stored as its reduced coefficient vector in the power basis.
class FieldElement {
public:
    FieldElement() : FieldElement(NumberField::rationals(), std::vector<Rational>{Rational(0)}) {}

    FieldElement(FieldPtr field, std::vector<Rational> coeffs) : f_(std::move(field)), c_(std::move(coeffs))
    {
        if (!f_) throw math_error("FieldElement without field");
        const std::size_t d = static_cast<std::size_t>(f_->degree());
        if (c_.size() > d) c_ = reduce(c_);
        c_.resize(d, Rational(0));
    }

    const FieldPtr& field() const noexcept { return f_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const
    {
        for (const auto& a : c_)
            if (sgn(a) != 0) return false;
        return true;
    }
    bool is_rational() const
    {
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (sgn(c_[k]) != 0) return false;
        return true;
    }
    Rational as_rational() const
    {
        if (!is_rational()) throw math_error("field element is not rational");
        return c_[0];
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b)
    {
        check_same(a, b);
        std::vector<Rational> r(a.c_);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] += b.c_[k];
        return FieldElement(a.f_, std::move(r), raw_tag{});
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b)
    {
        check_same(a, b);
        std::vector<Rational> r(a.c_);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b.c_[k];
        return FieldElement(a.f_, std::move(r), raw_tag{});
    }
    friend FieldElement operator-(const FieldElement& a)
    {
        std::vector<Rational> r(a.c_);
        for (auto& x : r) x = -x;
        return FieldElement(a.f_, std::move(r), raw_tag{});
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b)
    {
        check_same(a, b);
        const std::size_t d = a.c_.size();
        if (d == 1) return FieldElement(a.f_, std::vector<Rational>{a.c_[0] * b.c_[0]}, raw_tag{});
        std::vector<Rational> prod(2 * d - 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (sgn(b.c_[j]) != 0) prod[i + j] += a.c_[i] * b.c_[j];
        }
        return FieldElement(a.f_, a.reduce(prod), raw_tag{});
    }
    friend FieldElement operator*(const FieldElement& a, const Rational& s)
    {
        std::vector<Rational> r(a.c_);
        for (auto& x : r) x *= s;
        return FieldElement(a.f_, std::move(r), raw_tag{});
    }
    friend FieldElement operator*(const Rational& s, const FieldElement& a) { return a * s; }
    friend FieldElement operator+(const FieldElement& a, const Rational& s)
    {
        std::vector<Rational> r(a.c_);
        r[0] += s;
        return FieldElement(a.f_, std::move(r), raw_tag{});
    }
    friend FieldElement operator-(const FieldElement& a, const Rational& s) { return a + Rational(-s); }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b)
    {
        check_same(a, b);
        return a.c_ == b.c_;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the modulus.
    FieldElement inverse() const
    {
        if (is_zero()) throw math_error("division by zero in number field");
        if (c_.size() == 1) return FieldElement(f_, std::vector<Rational>{Rational(1) / c_[0]}, raw_tag{});
        // invariant: s * a == r0 (mod q)
        QPoly r0(c_, Rational(0)), r1 = f_->modulus();
        QPoly s0 = qpoly({1}), s1(Rational(0));
        while (!r1.is_zero_poly()) {
            auto qr = divmod(r0, r1);
            QPoly s2 = s0 - qr.quotient * s1;
            r0 = std::move(r1);
            r1 = std::move(qr.remainder);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.degree() != 0) throw math_error("element is a zero divisor: modulus of '" + f_->label() + "' is reducible");
        Rational inv = Rational(1) / r0.coeffs()[0];
        std::vector<Rational> out;
        for (const auto& x : s0.coeffs()) out.push_back(x * inv);
        return FieldElement(f_, std::move(out));
    }

    FieldElement pow(long e) const
    {
        FieldElement base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        FieldElement acc = f_->one();
        while (k) {
            if (k & 1ul) acc = acc * base;
            base = base * base;
            k >>= 1ul;
        }
        return acc;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (sgn(c_[k]) == 0) continue;
            Rational v = c_[k];
            if (!first) {
                os << (sgn(v) < 0 ? " - " : " + ");
                if (sgn(v) < 0) v = -v;
            }
            first = false;
            bool unit = (v == 1 || v == -1) && k > 0;
            if (!unit) os << v.get_str();
            else if (v == -1) os << '-';
            if (k > 0) {
                if (!unit) os << '*';
                os << f_->label();
                if (k > 1) os << '^' << k;
            }
        }
        return first ? "0" : os.str();
    }

    std::vector<std::string> coeff_strings() const
    {
        std::vector<std::string> out;
        for (const auto& x : c_) out.push_back(x.get_str());
        return out;
    }

private:
    struct raw_tag {};
    FieldElement(FieldPtr f, std::vector<Rational> c, raw_tag) : f_(std::move(f)), c_(std::move(c)) {}

    static void check_same(const FieldElement& a, const FieldElement& b)
    {
        if (a.f_ != b.f_ && !a.f_->same_as(*b.f_)) throw math_error("field mismatch");
    }

    std::vector<Rational> reduce(const std::vector<Rational>& v) const
    {
        const std::size_t d = static_cast<std::size_t>(f_->degree());
        std::vector<Rational> out(d, Rational(0));
        const auto& tab = f_->reduction_table();
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (sgn(v[k]) == 0) continue;
            if (k < d) {
                out[k] += v[k];
                continue;
            }
            std::vector<Rational> yk;
            if (k < tab.size()) {
                yk = tab[k];
            } else {
                // rare: only reached for unreduced input longer than 2d-1
                yk = tab[d - 1];
                for (std::size_t e = d - 1; e < k; ++e) {
                    std::vector<Rational> shifted(d + 1, Rational(0));
                    for (std::size_t j = 0; j < d; ++j) shifted[j + 1] = yk[j];
                    Rational top = shifted[d];
                    shifted.pop_back();
                    for (std::size_t j = 0; j < d; ++j) shifted[j] -= top * f_->modulus().coeffs()[j];
                    yk = std::move(shifted);
                }
            }
            for (std::size_t j = 0; j < d; ++j)
                if (sgn(yk[j]) != 0) out[j] += v[k] * yk[j];
        }
        return out;
    }

    FieldPtr f_;
    std::vector<Rational> c_;
};

inline FieldElement NumberField::element(std::vector<Rational> coeffs) const
{
    return FieldElement(shared_from_this(), std::move(coeffs));
}
inline FieldElement NumberField::from_rational(const Rational& r) const { return element({r}); }
inline FieldElement NumberField::zero() const { return element({Rational(0)}); }
inline FieldElement NumberField::one() const { return element({Rational(1)}); }
inline FieldElement NumberField::generator() const
{
    if (degree() == 1) return element({-modulus().coeffs()[0]});
    return element({Rational(0), Rational(1)});
}

inline bool is_zero(const FieldElement& a) { return a.is_zero(); }
inline FieldElement zero_like(const FieldElement& a) { return a.field()->zero(); }
inline FieldElement one_like(const FieldElement& a) { return a.field()->one(); }
inline FieldElement inverse(const FieldElement& a) { return a.inverse(); }
inline std::string to_string(const FieldElement& a) { return a.to_string(); }

/// Embeds a rational polynomial's coefficients into `field`.
inline Polynomial<FieldElement> to_field_poly(const QPoly& p, const FieldPtr& field)
{
    std::vector<FieldElement> c;
    for (const auto& x : p.coeffs()) c.push_back(field->from_rational(x));
    return Polynomial<FieldElement>(std::move(c), field->zero());
}

} // namespace fibrep

#endif
