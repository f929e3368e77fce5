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

#ifndef FIBREP_GROUP_WORD_HPP
#define FIBREP_GROUP_WORD_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fibrep/error.hpp"

namespace fibrep {

struct Letter {
    std::size_t gen = 0;  // 0-based generator index
    int exp = 1;          // +1 or -1

    Letter inverse() const { return {gen, -exp}; }
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Element of a free group, kept freely reduced.
class Word {
public:
    Word() = default;
    Word(std::vector<Letter> letters) : l_(std::move(letters))
    {
        for (const auto& x : l_)
            if (x.exp != 1 && x.exp != -1) throw parse_error("word letters must have exponent +1 or -1");
        reduce();
    }
    static Word generator(std::size_t g, int exp = 1) { return Word({Letter{g, exp}}); }

    const std::vector<Letter>& letters() const noexcept { return l_; }
    std::size_t length() const noexcept { return l_.size(); }
    bool empty() const noexcept { return l_.empty(); }

    Word inverse() const
    {
        std::vector<Letter> r;
        for (auto it = l_.rbegin(); it != l_.rend(); ++it) r.push_back(it->inverse());
        return Word(std::move(r));
    }

    friend Word operator*(const Word& a, const Word& b)
    {
        std::vector<Letter> r = a.l_;
        r.insert(r.end(), b.l_.begin(), b.l_.end());
        return Word(std::move(r));
    }

    friend bool operator==(const Word&, const Word&) = default;

    long exponent_sum(std::size_t g) const
    {
        long s = 0;
        for (const auto& x : l_)
            if (x.gen == g) s += x.exp;
        return s;
    }

    std::size_t max_generator() const
    {
        std::size_t m = 0;
        for (const auto& x : l_) m = std::max(m, x.gen + 1);
        return m;
    }

    /// Replace each generator g by images[g].
    Word substitute(const std::vector<Word>& images) const
    {
        Word r;
        for (const auto& x : l_) {
            if (x.gen >= images.size()) throw dimension_error("substitute: no image for generator " + std::to_string(x.gen + 1));
            r = r * (x.exp > 0 ? images[x.gen] : images[x.gen].inverse());
        }
        return r;
    }

    /// Cyclically reduced core: strips matching first/last letters.
    Word cyclic_core() const
    {
        std::size_t b = 0, e = l_.size();
        while (e - b >= 2 && l_[b] == l_[e - 1].inverse()) {
            ++b;
            --e;
        }
        return Word(std::vector<Letter>(l_.begin() + static_cast<std::ptrdiff_t>(b), l_.begin() + static_cast<std::ptrdiff_t>(e)));
    }

private:
    void reduce()
    {
        std::vector<Letter> out;
        for (const auto& x : l_) {
            if (!out.empty() && out.back() == x.inverse()) out.pop_back();
            else out.push_back(x);
        }
        l_ = std::move(out);
    }

    std::vector<Letter> l_;
};

/// Conjugacy in a free group: cyclic cores agree up to rotation.
inline bool conjugate_in_free_group(const Word& a, const Word& b)
{
    const Word ca = a.cyclic_core(), cb = b.cyclic_core();
    const auto& x = ca.letters();
    const auto& y = cb.letters();
    if (x.size() != y.size()) return false;
    if (x.empty()) return true;
    for (std::size_t s = 0; s < x.size(); ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < x.size() && ok; ++i) ok = x[(i + s) % x.size()] == y[i];
        if (ok) return true;
    }
    return false;
}

/// Parses whitespace-separated tokens such as "g1", "g3^-1", "t", "t^-1".
inline Word parse_word(std::string_view text, const std::vector<std::string>& labels)
{
    std::vector<Letter> out;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        int exp = 1;
        std::string name = tok;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            if (tok.substr(caret) != "^-1") throw parse_error("bad word token '" + tok + "'");
            exp = -1;
            name = tok.substr(0, caret);
        }
        std::size_t g = labels.size();
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) g = i;
        if (g == labels.size()) throw parse_error("unknown generator '" + name + "' in word token '" + tok + "'");
        out.push_back({g, exp});
    }
    return Word(std::move(out));
}

inline std::string format_word(const Word& w, const std::vector<std::string>& labels)
{
    std::string s;
    for (const auto& x : w.letters()) {
        if (!s.empty()) s += ' ';
        if (x.gen >= labels.size()) throw dimension_error("format_word: generator without label");
        s += labels[x.gen];
        if (x.exp < 0) s += "^-1";
    }
    return s;
}

} // namespace fibrep

#endif
