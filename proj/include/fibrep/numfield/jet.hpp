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

#ifndef FIBREP_NUMFIELD_JET_HPP
#define FIBREP_NUMFIELD_JET_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/numfield/number_field.hpp"
#include "fibrep/numfield/rational.hpp"

namespace fibrep {

/// Truncated power series c_0 + c_1 t + ... + c_{m-1} t^{m-1} in K[t]/(t^m).
template <class T>
class Jet {
public:
    Jet() = default;

    /// Zero jet of the given order.
    Jet(std::size_t order, const T& zero) : c_(order, zero_like(zero))
    {
        if (order == 0) throw math_error("jet order must be positive");
    }

    Jet(std::vector<T> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty()) throw math_error("jet order must be positive");
    }

    static Jet constant(const T& c, std::size_t order)
    {
        Jet j(order, c);
        j.c_[0] = c;
        return j;
    }

    /// The jet t (requires order >= 2 to be nonzero).
    static Jet variable(std::size_t order, const T& like)
    {
        Jet j(order, like);
        if (order > 1) j.c_[1] = one_like(like);
        return j;
    }

    std::size_t order() const noexcept { return c_.size(); }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    const T& operator[](std::size_t k) const { return c_.at(k); }
    T& operator[](std::size_t k) { return c_.at(k); }
    const T& constant_term() const { return c_.at(0); }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (!fibrep::is_zero(x)) return false;
        return true;
    }
    bool is_invertible() const { return !fibrep::is_zero(c_.at(0)); }

    /// Index of the first nonzero coefficient, or order() if the jet vanishes.
    std::size_t valuation() const
    {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!fibrep::is_zero(c_[k])) return k;
        return c_.size();
    }

    friend Jet operator+(const Jet& a, const Jet& b)
    {
        check(a, b);
        Jet r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = r.c_[k] + b.c_[k];
        return r;
    }
    friend Jet operator-(const Jet& a)
    {
        Jet r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }
    friend Jet operator*(const Jet& a, const Jet& b)
    {
        check(a, b);
        const std::size_t m = a.c_.size();
        Jet r(m, a.c_[0]);
        for (std::size_t i = 0; i < m; ++i) {
            if (fibrep::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j < m; ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend Jet operator*(const Jet& a, const Rational& s)
    {
        Jet r = a;
        for (auto& x : r.c_) x = x * s;
        return r;
    }
    friend Jet operator*(const Rational& s, const Jet& a) { return a * s; }
    friend Jet operator*(const T& s, const Jet& a) requires(!std::is_same_v<T, Rational>)
    {
        Jet r = a;
        for (auto& x : r.c_) x = s * x;
        return r;
    }
    friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }

    friend bool operator==(const Jet& a, const Jet& b)
    {
        check(a, b);
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            if (!fibrep::is_zero(a.c_[k] - b.c_[k])) return false;
        return true;
    }

    /// Inverse in K[t]/(t^m); needs an invertible constant term.
    Jet inverse() const
    {
        if (!is_invertible()) throw math_error("jet with zero constant term is not invertible");
        const std::size_t m = c_.size();
        T inv0 = fibrep::inverse(c_[0]);
        Jet r(m, c_[0]);
        r.c_[0] = inv0;
        for (std::size_t k = 1; k < m; ++k) {
            T acc = zero_like(c_[0]);
            for (std::size_t j = 1; j <= k; ++j) acc = acc + c_[j] * r.c_[k - j];
            r.c_[k] = -(acc * inv0);
        }
        return r;
    }

    Jet pow(unsigned e) const
    {
        Jet r = constant(one_like(c_.at(0)), c_.size()), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (fibrep::is_zero(c_[k])) continue;
            if (!first) os << " + ";
            first = false;
            os << '(' << fibrep::to_string(c_[k]) << ')';
            if (k > 0) os << "*t";
            if (k > 1) os << '^' << k;
        }
        if (first) os << '0';
        os << " + O(t^" << c_.size() << ')';
        return os.str();
    }

private:
    static void check(const Jet& a, const Jet& b)
    {
        if (a.c_.size() != b.c_.size()) throw math_error("jet order mismatch");
    }

    std::vector<T> c_;
};

template <class T>
bool is_zero(const Jet<T>& a) { return a.is_zero(); }
template <class T>
Jet<T> zero_like(const Jet<T>& a) { return Jet<T>(a.order(), a.constant_term()); }
template <class T>
Jet<T> one_like(const Jet<T>& a) { return Jet<T>::constant(one_like(a.constant_term()), a.order()); }
template <class T>
Jet<T> inverse(const Jet<T>& a) { return a.inverse(); }
template <class T>
std::string to_string(const Jet<T>& a) { return a.to_string(); }

} // namespace fibrep

#endif
