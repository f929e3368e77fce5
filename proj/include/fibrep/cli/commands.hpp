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

#ifndef FIBREP_CLI_COMMANDS_HPP
#define FIBREP_CLI_COMMANDS_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fibrep/analyze/report.hpp"
#include "fibrep/cohomology/twisted.hpp"
#include "fibrep/deform/burnside.hpp"
#include "fibrep/deform/jet_rep.hpp"
#include "fibrep/io/spec_file.hpp"
#include "fibrep/rep/symmetric_power.hpp"

namespace fibrep::cli {

enum class Format { text, machine };

struct CommonOptions {
    std::optional<int> precision;
    bool exact_only = false;
    Format format = Format::text;
    std::optional<std::string> factor;  // comma-separated, leading coefficient first
    std::optional<std::size_t> n;
    std::optional<std::size_t> root_choice;
};

/// "a,b;c,d" (or "a,b|c,d") with rational entries.
inline Matrix<Rational> parse_matrix(const std::string& text)
{
    std::vector<std::vector<Rational>> rows;
    std::string rows_text = text;
    std::replace(rows_text.begin(), rows_text.end(), '|', ';');
    std::stringstream rs(rows_text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<Rational> r;
        std::stringstream cs(row);
        std::string cell;
        while (std::getline(cs, cell, ',')) r.push_back(parse_rational(cell));
        if (!rows.empty() && r.size() != rows.front().size()) throw parse_error("matrix '" + text + "': ragged rows");
        rows.push_back(std::move(r));
    }
    if (rows.empty() || rows.front().empty()) throw parse_error("matrix '" + text + "': no entries");
    Matrix<Rational> m(rows.size(), rows.front().size(), Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

inline QPoly parse_factor(const std::string& text)
{
    std::vector<Rational> c;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.push_back(parse_rational(tok));
    if (c.size() < 2) throw parse_error("factor '" + text + "': need degree >= 1");
    std::reverse(c.begin(), c.end());
    return QPoly(std::move(c), Rational(0));
}

inline SpecFile load_with_overrides(const std::string& path, const CommonOptions& o)
{
    SpecFile s = load_spec(path);
    if (o.factor) s.factor = parse_factor(*o.factor);
    if (o.n) {
        if (*o.n < 2) throw parse_error("--n must be >= 2");
        s.n = *o.n;
    }
    if (o.root_choice) s.root_choice = *o.root_choice;
    if (o.precision) s.precision = *o.precision;
    if (o.exact_only) s.exact_only = true;
    return s;
}

inline void emit(std::ostream& out, const Format f, const std::string& human, const json& machine)
{
    if (f == Format::text) out << human << "--- machine ---\n";
    out << machine.dump(2) << "\n";
}

inline std::string human_summary(const json& d)
{
    std::ostringstream os;
    os << "n = " << d["n"].get<std::size_t>() << ", k = " << d["monodromy"]["k"].get<std::size_t>() << "\n";
    if (d.contains("hypotheses")) {
        const auto& h = d["hypotheses"];
        if (h.contains("error")) {
            os << "hypotheses: error: " << h["error"].get<std::string>() << "\n";
        } else {
            os << "simple eigenvalue: " << h["simple_eigenvalue"] << "\n"
               << "|lambda| != 1: " << h["archimedean"].get<std::string>() << "\n"
               << "1 not an eigenvalue on the closed surface: " << h["one_not_eigenvalue_closed"] << "\n";
            for (const auto& [key, val] : h["power_conditions"].items()) os << key << " not an eigenvalue: " << val << "\n";
        }
    }
    if (d.contains("cohomology")) {
        const auto& c = d["cohomology"];
        if (c.contains("h1"))
            os << "h0 = " << c["h0"] << ", b1 = " << c["b1"] << ", z1 = " << c["z1"] << ", h1 = " << c["h1"] << "\n";
        else if (c.contains("skipped"))
            os << "cohomology skipped: " << c["skipped"].get<std::string>() << "\n";
        else if (c.contains("error"))
            os << "cohomology error: " << c["error"].get<std::string>() << "\n";
    }
    if (d.contains("predicted")) os << "predicted h1 = " << d["predicted"]["h1"] << ", predicted z1 = " << d["predicted"]["z1"] << "\n";
    if (d.contains("burnside") && d["burnside"].contains("algebra_dim"))
        os << "algebra_dim " << d["burnside"]["algebra_dim"] << (d["burnside"]["reducible"].get<bool>() ? " (reducible)" : " (irreducible)") << "\n";
    os << "verdict: " << d["verdict"]["summary"].get<std::string>() << "\n";
    return os.str();
}

inline int cmd_analyze(const std::string& path, const CommonOptions& o, std::ostream& out)
{
    const SpecFile s = load_with_overrides(path, o);
    const Verdict v = full_report(to_analysis_input(s));
    emit(out, o.format, human_summary(v.doc), v.doc);
    return v.exit_code();
}

inline int cmd_rn(const std::string& matrix, std::size_t n, const CommonOptions& o, std::ostream& out)
{
    const auto m = parse_matrix(matrix);
    const auto r = r_n(m, n);
    json doc = {{"n", n}, {"input", to_json(m)}, {"r_n", to_json(r)}};
    emit(out, o.format, "r_" + std::to_string(n) + " =\n" + r.to_string(), doc);
    return 0;
}

inline int cmd_burnside(const std::vector<std::string>& matrices, const CommonOptions& o, std::ostream& out)
{
    std::vector<Matrix<Rational>> mats;
    for (const auto& t : matrices) mats.push_back(parse_matrix(t));
    const auto r = burnside_irreducible(mats);
    json doc = {{"irreducible", r.irreducible}, {"algebra_dim", r.algebra_dim}, {"dims_per_round", r.dims_per_round}};
    if (!o.exact_only) {
        std::vector<CMatrix> cm;
        for (const auto& m : mats) {
            CMatrix c(m.rows(), std::vector<std::complex<double>>(m.cols()));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) c[i][j] = m(i, j).get_d();
            cm.push_back(std::move(c));
        }
        try {
            const auto nr = burnside_irreducible_numeric(cm);
            doc["numeric"] = {{"irreducible", nr.irreducible}, {"algebra_dim", nr.algebra_dim}};
        } catch (const indeterminate_error& e) {
            doc["numeric"] = {{"error", e.what()}};
        }
    }
    emit(out, o.format, std::string(r.irreducible ? "irreducible" : "reducible") + ", algebra_dim " + std::to_string(r.algebra_dim) + "\n",
         doc);
    return 0;
}

struct SpecPipeline {
    SpecFile spec;
    MappingTorus torus;
    EigenData eig;
    Rep<FieldElement> rho;
};

inline SpecPipeline build_pipeline(const SpecFile& s)
{
    const auto in = to_analysis_input(s);
    if (!in.words) throw parse_error("monodromy: this command needs word-level images");
    const auto L = lambda_field_from_factor(s.factor, {s.modulus, s.assert_irreducible});
    SpecPipeline p{s, mapping_torus_presentation(*in.words), eigen_data(in.phi_star, L), {}};
    p.rho = build_rho_lambda(p.torus, p.eig);
    return p;
}

/// Module selector: "sl" (adjoint of rho_{lambda,n}), "R<m>", or "trivial".
inline int cmd_cohomology(const std::string& path, const std::string& module, const CommonOptions& o, std::ostream& out)
{
    const SpecFile s = load_with_overrides(path, o);
    const auto p = build_pipeline(s);
    ModuleAction<FieldElement> mod;
    if (module == "sl") {
        mod = adjoint_action(compose_r_n(p.rho, s.n));
    } else if (module == "trivial") {
        mod = module_R(0, p.rho);
    } else if (module.size() > 1 && module[0] == 'R') {
        std::size_t m = 0;
        try {
            m = std::stoul(module.substr(1));
        } catch (const std::exception&) {
            throw parse_error("--module '" + module + "': expected sl, trivial or R<m>");
        }
        mod = module_R(m, p.rho);
    } else {
        throw parse_error("--module '" + module + "': expected sl, trivial or R<m>");
    }
    const auto d = cohomology_dims(mod);
    json doc = {{"module", module}, {"n", s.n}, {"degree", mod.degree()}, {"h0", d.h0}, {"b1", d.b1}, {"z1", d.z1}, {"h1", d.h1}};
    std::ostringstream h;
    h << "module " << module << " (dim " << mod.degree() << "): h0 = " << d.h0 << ", b1 = " << d.b1 << ", z1 = " << d.z1
      << ", h1 = " << d.h1 << "\n";
    emit(out, o.format, h.str(), doc);
    return 0;
}

inline int cmd_deform(const std::string& path, std::size_t cocycle, std::size_t order, const CommonOptions& o, std::ostream& out)
{
    const SpecFile s = load_with_overrides(path, o);
    const auto p = build_pipeline(s);
    const auto rhon = compose_r_n(p.rho, s.n);
    const ObstructionSolver<FieldElement> solver(rhon);
    const auto basis = kernel_basis(cocycle_system(solver.adjoint()));
    if (cocycle >= basis.size())
        throw parse_error("--cocycle " + std::to_string(cocycle) + ": Z^1 has dimension " + std::to_string(basis.size()));
    if (order < 2) throw parse_error("--order must be >= 2");
    const auto [rep, jet] = deform_to_order(solver, basis[cocycle], order);
    std::ostringstream h;
    if (!rep.solved_orders.empty()) {
        h << "solvable at orders ";
        for (std::size_t i = 0; i < rep.solved_orders.size(); ++i) h << (i ? "," : "") << rep.solved_orders[i];
        h << "\n";
    }
    if (rep.obstructed_at) h << "obstructed at order " << *rep.obstructed_at + 1 << "\n";
    json doc = {{"cocycle", cocycle}, {"z1", basis.size()}, {"target_order", order}, {"solved_orders", rep.solved_orders},
                {"obstructed", rep.obstructed_at.has_value()}};
    emit(out, o.format, h.str(), doc);
    return rep.obstructed_at ? 1 : 0;
}

inline int cmd_twist_matrix(const std::string& path, const CommonOptions& o, std::ostream& out)
{
    const SpecFile s = load_with_overrides(path, o);
    const auto [phi, k] = spec_action(s);
    const auto cp = char_poly(phi);
    json doc = {{"phi_star", to_json(phi)}, {"k", k}, {"char_poly", to_json(cp)}};
    std::ostringstream h;
    h << "phi_* =\n" << phi.to_string() << "char poly: " << cp.to_string() << "\n";
    if (s.genus > 0) {
        const std::size_t b = static_cast<std::size_t>(2 * s.genus);
        const auto ccp = char_poly(phi.block(0, 0, b, b));
        doc["closed_char_poly"] = to_json(ccp);
        h << "closed surface char poly: " << ccp.to_string() << "\n";
    }
    emit(out, o.format, h.str(), doc);
    return 0;
}

} // namespace fibrep::cli

#endif
