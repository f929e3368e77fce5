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

#ifndef FIBREP_GROUP_PRESENTATION_HPP
#define FIBREP_GROUP_PRESENTATION_HPP

#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/group/word.hpp"
#include "fibrep/linalg/matrix.hpp"
#include "fibrep/numfield/rational.hpp"

namespace fibrep {

struct Presentation {
    std::vector<std::string> labels;
    std::vector<Word> relators;

    std::size_t generator_count() const noexcept { return labels.size(); }

    std::size_t index_of(const std::string& label) const
    {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return i;
        throw parse_error("no generator labelled '" + label + "'");
    }

    void validate() const
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size()) throw parse_error("presentation labels are not unique");
        for (const auto& r : relators)
            if (r.max_generator() > labels.size()) throw dimension_error("relator uses an undeclared generator");
    }
};

/// Homomorphism to Z dual to the fiber.
struct FiberWeight {
    std::vector<long> psi;

    long operator()(const Word& w) const
    {
        long s = 0;
        for (const auto& x : w.letters()) s += x.exp * psi.at(x.gen);
        return s;
    }
};

/// Surface labels g1..g_{2g+p}; the mapping torus adds t.
inline std::vector<std::string> surface_labels(std::size_t count)
{
    std::vector<std::string> l;
    for (std::size_t i = 1; i <= count; ++i) l.push_back("g" + std::to_string(i));
    return l;
}

struct MonodromySpec {
    int genus = 0;
    int punctures = 1;
    std::vector<Word> images;                  // phi(g_i), words in g1..g_{2g+p}
    std::vector<std::size_t> puncture_permutation;  // 0-based: g_{2g+j} maps to a conjugate of g_{2g+perm[j]}
    std::optional<Word> relator_conjugator;    // c with phi(R) = c R c^-1

    std::size_t surface_rank() const { return static_cast<std::size_t>(2 * genus + punctures); }

    friend bool operator==(const MonodromySpec&, const MonodromySpec&) = default;
};

/// prod_i [g_{2i-1}, g_{2i}] * (prod_j g_{2g+j})^-1 with [a,b] = a b a^-1 b^-1.
inline Word surface_relator(int genus, int punctures)
{
    std::vector<Letter> l;
    for (int i = 0; i < genus; ++i) {
        std::size_t a = static_cast<std::size_t>(2 * i), b = a + 1;
        l.insert(l.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
    }
    for (int j = punctures; j-- > 0;) l.push_back({static_cast<std::size_t>(2 * genus + j), -1});
    return Word(std::move(l));
}

/// Throws relator_error / parse_error naming the failed check.
inline void validate(const MonodromySpec& s)
{
    if (s.genus < 0) throw parse_error("monodromy: genus must be >= 0");
    if (s.punctures < 1) throw parse_error("monodromy: at least one puncture is required");
    if (2 * s.genus + s.punctures <= 2) throw parse_error("monodromy: 2g + p must exceed 2");
    const std::size_t m = s.surface_rank();
    if (s.images.size() != m)
        throw parse_error("monodromy: expected " + std::to_string(m) + " images, got " + std::to_string(s.images.size()));
    for (std::size_t i = 0; i < m; ++i)
        if (s.images[i].max_generator() > m)
            throw parse_error("monodromy: image of g" + std::to_string(i + 1) + " uses a non-surface generator");
    if (s.puncture_permutation.size() != static_cast<std::size_t>(s.punctures))
        throw parse_error("monodromy: puncture permutation has the wrong length");
    std::vector<bool> hit(static_cast<std::size_t>(s.punctures), false);
    for (auto k : s.puncture_permutation) {
        if (k >= hit.size() || hit[k]) throw parse_error("monodromy: puncture_permutation is not a permutation");
        hit[k] = true;
    }
    const std::size_t base = static_cast<std::size_t>(2 * s.genus);
    for (std::size_t j = 0; j < s.puncture_permutation.size(); ++j) {
        const Word target = Word::generator(base + s.puncture_permutation[j]);
        if (!conjugate_in_free_group(s.images[base + j], target))
            throw relator_error("monodromy: image of g" + std::to_string(base + j + 1) + " is not conjugate to g" +
                                std::to_string(base + s.puncture_permutation[j] + 1));
    }
    const Word r = surface_relator(s.genus, s.punctures);
    const Word fr = r.substitute(s.images);
    if (s.relator_conjugator) {
        if (s.relator_conjugator->max_generator() > m) throw parse_error("monodromy: conjugator uses a non-surface generator");
        if (!(fr == *s.relator_conjugator * r * s.relator_conjugator->inverse()))
            throw relator_error("monodromy: surface relator is not preserved by the given conjugator");
    } else if (!conjugate_in_free_group(fr, r)) {
        throw relator_error("monodromy: surface relator is not preserved up to conjugacy");
    }
}

struct MappingTorus {
    Presentation presentation;
    FiberWeight weight;
    std::size_t t_index = 0;
};

/// Generators g1..g_{2g+p}, t; relators phi(g_i) t g_i^-1 t^-1, then the surface relator.
inline MappingTorus mapping_torus_presentation(const MonodromySpec& s)
{
    validate(s);
    const std::size_t m = s.surface_rank();
    MappingTorus out;
    out.presentation.labels = surface_labels(m);
    out.presentation.labels.push_back("t");
    out.t_index = m;
    const Word t = Word::generator(m);
    for (std::size_t i = 0; i < m; ++i)
        out.presentation.relators.push_back(s.images[i] * t * Word::generator(i, -1) * t.inverse());
    out.presentation.relators.push_back(surface_relator(s.genus, s.punctures));
    out.weight.psi.assign(m + 1, 0);
    out.weight.psi[m] = 1;
    return out;
}

struct AbelianizedAction {
    Matrix<Rational> phi_star;    // row i: exponent sums of phi(g_i); acts on H^1
    Matrix<Rational> closed_block;  // upper-left 2g x 2g block
    Matrix<Rational> P;           // puncture permutation block
    std::size_t k = 0;            // cycles of the permutation
};

inline std::size_t permutation_cycles(const std::vector<std::size_t>& perm)
{
    std::vector<bool> seen(perm.size(), false);
    std::size_t c = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return c;
}

inline Matrix<Rational> exponent_sum_matrix(const std::vector<Word>& images, std::size_t m)
{
    Matrix<Rational> a(images.size(), m, Rational(0));
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = Rational(images[i].exponent_sum(j));
    return a;
}

inline AbelianizedAction abelianized_action(const MonodromySpec& s)
{
    validate(s);
    const std::size_t m = s.surface_rank(), base = static_cast<std::size_t>(2 * s.genus);
    AbelianizedAction out;
    out.phi_star = exponent_sum_matrix(s.images, m);
    out.closed_block = base ? out.phi_star.block(0, 0, base, base) : Matrix<Rational>();
    out.P = out.phi_star.block(base, base, m - base, m - base);
    if (base > 0 && !out.phi_star.block(base, 0, m - base, base).is_zero())
        throw relator_error("abelianized action: puncture rows have surface components");
    out.k = permutation_cycles(s.puncture_permutation);
    return out;
}

/// (f o g)(x) = f(g(x)).
inline MonodromySpec compose(const MonodromySpec& f, const MonodromySpec& g)
{
    if (f.genus != g.genus || f.punctures != g.punctures) throw dimension_error("compose: surfaces differ");
    MonodromySpec out;
    out.genus = f.genus;
    out.punctures = f.punctures;
    for (const auto& w : g.images) out.images.push_back(w.substitute(f.images));
    for (std::size_t j = 0; j < g.puncture_permutation.size(); ++j)
        out.puncture_permutation.push_back(f.puncture_permutation[g.puncture_permutation[j]]);
    return out;
}

} // namespace fibrep

#endif
