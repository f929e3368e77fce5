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

#ifndef FIBREP_IO_SPEC_FILE_HPP
#define FIBREP_IO_SPEC_FILE_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibrep/analyze/report.hpp"
#include "fibrep/error.hpp"
#include "fibrep/group/presentation.hpp"
#include "fibrep/group/twist.hpp"
#include "fibrep/group/word.hpp"

namespace fibrep {

// JSON with C-style comments allowed. Polynomial coefficients are listed leading term
// first, as quoted rationals or integers.
struct SpecFile {
    int genus = 0;
    int punctures = 1;
    std::string type = "words";  // "words" or "homology_twists"
    std::vector<std::string> images;
    std::vector<TwistStep> twists;
    std::vector<std::size_t> puncture_permutation;  // 0-based
    std::optional<std::string> relator_conjugator;
    QPoly factor;
    std::optional<QPoly> modulus;
    std::size_t root_choice = 0;
    bool assert_irreducible = false;
    std::size_t n = 2;
    int precision = 50;
    bool exact_only = false;

    std::size_t surface_rank() const { return static_cast<std::size_t>(2 * genus + punctures); }
};

namespace detail {

using njson = nlohmann::json;

inline std::string line_col(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

[[noreturn]] inline void field_error(const std::string& path, const std::string& what)
{
    throw parse_error(path + ": " + what);
}

inline const njson& require(const njson& obj, const std::string& key, const std::string& path)
{
    if (!obj.is_object()) field_error(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) field_error(path + "." + key, "missing field");
    return *it;
}

inline Rational rational_field(const njson& v, const std::string& path)
{
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const parse_error& e) {
        field_error(path, e.what());
    }
    field_error(path, "expected an integer or a quoted rational");
}

inline long integer_field(const njson& v, const std::string& path, long lo)
{
    if (!v.is_number_integer()) field_error(path, "expected an integer");
    long x = v.get<long>();
    if (x < lo) field_error(path, "must be >= " + std::to_string(lo));
    return x;
}

inline bool bool_field(const njson& v, const std::string& path)
{
    if (!v.is_boolean()) field_error(path, "expected true or false");
    return v.get<bool>();
}

inline QPoly poly_field(const njson& v, const std::string& path)
{
    if (!v.is_array() || v.empty()) field_error(path, "expected a non-empty coefficient list");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < v.size(); ++i) c.push_back(rational_field(v[i], path + "[" + std::to_string(i) + "]"));
    std::reverse(c.begin(), c.end());
    QPoly p(std::move(c), Rational(0));
    if (p.degree() < 1) field_error(path, "polynomial must have degree >= 1");
    return p;
}

inline njson poly_json(const QPoly& p)
{
    njson a = njson::array();
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) a.push_back(to_string(*it));
    return a;
}

inline Word word_field(const std::string& text, const std::vector<std::string>& labels, const std::string& path)
{
    try {
        return parse_word(text, labels);
    } catch (const parse_error& e) {
        field_error(path, e.what());
    }
}

} // namespace detail

inline SpecFile parse_spec(const std::string& text)
{
    using detail::njson;
    njson root;
    try {
        root = njson::parse(text, nullptr, true, true);
    } catch (const njson::parse_error& e) {
        throw parse_error("syntax error at " + detail::line_col(text, e.byte ? e.byte - 1 : 0) + ": " + e.what());
    }
    if (!root.is_object()) throw parse_error("spec: top level must be an object");

    SpecFile s;
    const auto& surf = detail::require(root, "surface", "spec");
    s.genus = static_cast<int>(detail::integer_field(detail::require(surf, "genus", "surface"), "surface.genus", 0));
    s.punctures = static_cast<int>(detail::integer_field(detail::require(surf, "punctures", "surface"), "surface.punctures", 1));
    if (2 * s.genus + s.punctures <= 2) detail::field_error("surface", "need 2*genus + punctures > 2");

    const auto& mono = detail::require(root, "monodromy", "spec");
    const auto& type = detail::require(mono, "type", "monodromy");
    if (!type.is_string()) detail::field_error("monodromy.type", "expected a string");
    s.type = type.get<std::string>();
    if (s.type != "words" && s.type != "homology_twists")
        detail::field_error("monodromy.type", "expected \"words\" or \"homology_twists\", got \"" + s.type + "\"");
    const auto labels = surface_labels(s.surface_rank());
    if (s.type == "words") {
        const auto& im = detail::require(mono, "images", "monodromy");
        if (!im.is_array()) detail::field_error("monodromy.images", "expected a list of words");
        for (std::size_t i = 0; i < im.size(); ++i) {
            const std::string path = "monodromy.images[" + std::to_string(i) + "]";
            if (!im[i].is_string()) detail::field_error(path, "expected a word string");
            s.images.push_back(im[i].get<std::string>());
            detail::word_field(s.images.back(), labels, path);
        }
        if (s.images.size() != s.surface_rank())
            detail::field_error("monodromy.images",
                                "expected " + std::to_string(s.surface_rank()) + " images, got " + std::to_string(s.images.size()));
    }
    if (mono.contains("twists")) {
        const auto& tw = mono["twists"];
        if (!tw.is_array()) detail::field_error("monodromy.twists", "expected a list");
        for (std::size_t i = 0; i < tw.size(); ++i) {
            const std::string path = "monodromy.twists[" + std::to_string(i) + "]";
            TwistStep st;
            const auto& c = detail::require(tw[i], "curve", path);
            if (!c.is_array() || c.size() != static_cast<std::size_t>(2 * s.genus))
                detail::field_error(path + ".curve", "expected " + std::to_string(2 * s.genus) + " coordinates");
            for (std::size_t j = 0; j < c.size(); ++j)
                st.curve.push_back(detail::rational_field(c[j], path + ".curve[" + std::to_string(j) + "]"));
            st.sign = static_cast<int>(detail::integer_field(detail::require(tw[i], "sign", path), path + ".sign", -1));
            if (st.sign != 1 && st.sign != -1) detail::field_error(path + ".sign", "must be 1 or -1");
            s.twists.push_back(std::move(st));
        }
    } else if (s.type == "homology_twists") {
        detail::field_error("monodromy.twists", "missing field");
    }
    if (mono.contains("puncture_permutation")) {
        const auto& pp = mono["puncture_permutation"];
        if (!pp.is_array() || pp.size() != static_cast<std::size_t>(s.punctures))
            detail::field_error("monodromy.puncture_permutation", "expected " + std::to_string(s.punctures) + " entries");
        std::vector<bool> seen(pp.size(), false);
        for (std::size_t j = 0; j < pp.size(); ++j) {
            const std::string path = "monodromy.puncture_permutation[" + std::to_string(j) + "]";
            long x = detail::integer_field(pp[j], path, 1);
            if (x > s.punctures || seen[x - 1]) detail::field_error(path, "not a permutation of 1.." + std::to_string(s.punctures));
            seen[x - 1] = true;
            s.puncture_permutation.push_back(static_cast<std::size_t>(x - 1));
        }
    } else {
        for (int j = 0; j < s.punctures; ++j) s.puncture_permutation.push_back(static_cast<std::size_t>(j));
    }
    if (mono.contains("relator_conjugator")) {
        const auto& c = mono["relator_conjugator"];
        if (!c.is_string()) detail::field_error("monodromy.relator_conjugator", "expected a word string");
        s.relator_conjugator = c.get<std::string>();
        detail::word_field(*s.relator_conjugator, labels, "monodromy.relator_conjugator");
    }

    const auto& lam = detail::require(root, "lambda", "spec");
    s.factor = detail::poly_field(detail::require(lam, "factor", "lambda"), "lambda.factor");
    if (lam.contains("modulus")) s.modulus = detail::poly_field(lam["modulus"], "lambda.modulus");
    if (lam.contains("root_choice"))
        s.root_choice = static_cast<std::size_t>(detail::integer_field(lam["root_choice"], "lambda.root_choice", 0));
    if (lam.contains("assert_irreducible")) s.assert_irreducible = detail::bool_field(lam["assert_irreducible"], "lambda.assert_irreducible");

    s.n = static_cast<std::size_t>(detail::integer_field(detail::require(root, "n", "spec"), "n", 2));
    if (root.contains("options")) {
        const auto& o = root["options"];
        if (!o.is_object()) detail::field_error("options", "expected an object");
        if (o.contains("precision")) s.precision = static_cast<int>(detail::integer_field(o["precision"], "options.precision", 10));
        if (o.contains("exact_only")) s.exact_only = detail::bool_field(o["exact_only"], "options.exact_only");
    }
    return s;
}

inline SpecFile load_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open spec file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_spec(ss.str());
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

inline std::string serialize_spec(const SpecFile& s)
{
    using detail::njson;
    njson root = njson::object();
    root["surface"] = {{"genus", s.genus}, {"punctures", s.punctures}};
    njson mono = {{"type", s.type}};
    if (s.type == "words") mono["images"] = s.images;
    if (!s.twists.empty()) {
        njson tw = njson::array();
        for (const auto& t : s.twists) {
            njson c = njson::array();
            for (const auto& x : t.curve) c.push_back(to_string(x));
            tw.push_back({{"curve", c}, {"sign", t.sign}});
        }
        mono["twists"] = tw;
    }
    njson pp = njson::array();
    for (auto j : s.puncture_permutation) pp.push_back(j + 1);
    mono["puncture_permutation"] = pp;
    if (s.relator_conjugator) mono["relator_conjugator"] = *s.relator_conjugator;
    root["monodromy"] = mono;
    njson lam = {{"factor", detail::poly_json(s.factor)}, {"root_choice", s.root_choice}, {"assert_irreducible", s.assert_irreducible}};
    if (s.modulus) lam["modulus"] = detail::poly_json(*s.modulus);
    root["lambda"] = lam;
    root["n"] = s.n;
    root["options"] = {{"precision", s.precision}, {"exact_only", s.exact_only}};
    return root.dump(2) + "\n";
}

inline bool has_words(const SpecFile& s) { return s.type == "words"; }

inline MonodromySpec to_monodromy(const SpecFile& s)
{
    if (!has_words(s)) throw parse_error("monodromy: homology_twists input has no word-level images");
    const auto labels = surface_labels(s.surface_rank());
    MonodromySpec m;
    m.genus = s.genus;
    m.punctures = s.punctures;
    for (std::size_t i = 0; i < s.images.size(); ++i)
        m.images.push_back(detail::word_field(s.images[i], labels, "monodromy.images[" + std::to_string(i) + "]"));
    m.puncture_permutation = s.puncture_permutation;
    if (s.relator_conjugator) m.relator_conjugator = detail::word_field(*s.relator_conjugator, labels, "monodromy.relator_conjugator");
    try {
        validate(m);
    } catch (const error& e) {
        throw parse_error(std::string("monodromy: ") + e.what());
    }
    return m;
}

/// phi_* and k; for word input with a twist list the two homology actions must agree.
inline std::pair<Matrix<Rational>, std::size_t> spec_action(const SpecFile& s)
{
    const std::size_t k = permutation_cycles(s.puncture_permutation);
    if (!has_words(s)) return {homology_monodromy(s.genus, s.twists, s.puncture_permutation), k};
    const auto ab = abelianized_action(to_monodromy(s));
    if (!s.twists.empty() && homology_monodromy(s.genus, s.twists, s.puncture_permutation) != ab.phi_star)
        throw parse_error("monodromy.twists: homology action of the twists disagrees with the word images");
    return {ab.phi_star, ab.k};
}

inline AnalysisInput to_analysis_input(const SpecFile& s)
{
    AnalysisInput in;
    in.genus = s.genus;
    in.punctures = s.punctures;
    if (has_words(s)) in.words = to_monodromy(s);
    auto [phi, k] = spec_action(s);
    in.phi_star = std::move(phi);
    in.k = k;
    in.q_sq = s.factor;
    in.n = s.n;
    in.options.root_choice = s.root_choice;
    in.options.precision = s.precision;
    in.options.modulus = s.modulus;
    in.options.assert_irreducible = s.assert_irreducible;
    return in;
}

} // namespace fibrep

#endif
