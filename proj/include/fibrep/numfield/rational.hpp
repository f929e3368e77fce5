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

#ifndef FIBREP_NUMFIELD_RATIONAL_HPP
#define FIBREP_NUMFIELD_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "fibrep/error.hpp"

namespace fibrep {

/// Arbitrary precision rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q". Whitespace around the token is ignored.
inline Rational parse_rational(std::string_view text)
{
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string tok(text.substr(b, e - b));
    if (tok.empty()) throw parse_error("empty rational literal");
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    bool slash = false, digit = false;
    for (std::size_t k = i; k < tok.size(); ++k) {
        char c = tok[k];
        if (c == '/') {
            if (slash || !digit) throw parse_error("malformed rational literal '" + tok + "'");
            slash = true;
            digit = false;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digit = true;
        } else {
            throw parse_error("malformed rational literal '" + tok + "'");
        }
    }
    if (!digit) throw parse_error("malformed rational literal '" + tok + "'");
    if (tok[0] == '+') tok.erase(0, 1);
    Rational r;
    if (r.set_str(tok, 10) != 0) throw parse_error("malformed rational literal '" + tok + "'");
    if (r.get_den() == 0) throw parse_error("zero denominator in '" + tok + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational inverse(const Rational& r)
{
    if (is_zero(r)) throw math_error("division by zero");
    return Rational(1) / r;
}

} // namespace fibrep

#endif
