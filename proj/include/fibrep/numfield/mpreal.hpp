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

#ifndef FIBREP_NUMFIELD_MPREAL_HPP
#define FIBREP_NUMFIELD_MPREAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "fibrep/numfield/rational.hpp"

namespace fibrep::numeric {

/// Owning wrapper around an mpfr_t. Results of binary operations take the larger precision
/// of the operands; rounding is to nearest.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(const Rational& q, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    /// Sets from a rational; `exact` reports whether no rounding happened.
    Real(const Rational& q, mpfr_prec_t prec, bool& exact)
    {
        mpfr_init2(v_, prec);
        exact = mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN) == 0;
    }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept : Real(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static Real pow2(long e, mpfr_prec_t prec)
    {
        Real r(1L, prec);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits) const
    {
        char* s = nullptr;
        std::string fmt = "%." + std::to_string(digits) + "Rg";
        mpfr_asprintf(&s, fmt.c_str(), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

#define FIBREP_REAL_BINOP(op, fn)                                            \
    friend Real operator op(const Real& a, const Real& b)                   \
    {                                                                        \
        Real r(std::max(a.prec(), b.prec()));                                \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                     \
        return r;                                                            \
    }
    FIBREP_REAL_BINOP(+, mpfr_add)
    FIBREP_REAL_BINOP(-, mpfr_sub)
    FIBREP_REAL_BINOP(*, mpfr_mul)
    FIBREP_REAL_BINOP(/, mpfr_div)
#undef FIBREP_REAL_BINOP

    friend Real operator-(const Real& a)
    {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }

    friend Real abs(const Real& a)
    {
        Real r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real sqrt(const Real& a)
    {
        Real r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDU);
        return r;
    }
    friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

private:
    mpfr_t v_;
};

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t p = 128) : re(p), im(p) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
    friend Complex operator/(const Complex& a, const Complex& b)
    {
        Real den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    /// Upper bound on the modulus.
    friend Real abs(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }

    std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }
};

} // namespace fibrep::numeric

#endif
