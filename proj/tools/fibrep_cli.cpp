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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibrep/cli/commands.hpp"

int main(int argc, char** argv)
{
    using namespace fibrep::cli;
    CLI::App app{"fibrep: twisted cohomology and deformations of fibred 3-manifold representations"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions o;
    int precision = 50;
    std::string format = "text";
    auto* prec_opt = app.add_option("--precision", precision, "digits for certified numeric checks")->check(CLI::PositiveNumber);
    app.add_flag("--exact-only", o.exact_only, "skip floating-point cross-checks");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

    std::string path, matrix, module = "sl", factor;
    std::vector<std::string> matrices;
    std::size_t n = 2, cocycle = 0, order = 3, root_choice = 0;

    auto add_spec_overrides = [&](CLI::App* sub) {
        sub->add_option("spec", path, "spec file")->required()->check(CLI::ExistingFile);
        sub->add_option("--factor", factor, "override lambda.factor, leading coefficient first, e.g. 1,-5,1");
        sub->add_option("--n", n, "override n");
        sub->add_option("--root-choice", root_choice, "override lambda.root_choice");
    };

    auto* analyze = app.add_subcommand("analyze", "full hypothesis and dimension report");
    add_spec_overrides(analyze);
    auto* rn = app.add_subcommand("rn", "r_n of an SL(2) matrix");
    rn->add_option("--matrix", matrix, "entries as a,b;c,d")->required();
    rn->add_option("--n", n, "dimension")->required();
    auto* burnside = app.add_subcommand("burnside", "dimension of the generated matrix algebra");
    burnside->add_option("--matrix", matrices, "entries as a,b;c,d (repeatable)")->required();
    auto* cohomology = app.add_subcommand("cohomology", "twisted cohomology dimensions");
    add_spec_overrides(cohomology);
    cohomology->add_option("--module", module, "sl, trivial or R<m>");
    auto* deform = app.add_subcommand("deform", "extend a Z^1 basis cocycle order by order");
    add_spec_overrides(deform);
    deform->add_option("--cocycle", cocycle, "index into the Z^1 basis");
    deform->add_option("--order", order, "target order");
    auto* twist = app.add_subcommand("twist-matrix", "homology action and characteristic polynomials");
    add_spec_overrides(twist);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (prec_opt->count() > 0) o.precision = precision;
    o.format = format == "machine" ? Format::machine : Format::text;
    auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
    for (auto* sub : {analyze, cohomology, deform, twist}) {
        if (!*sub) continue;
        if (given(sub, "--factor")) o.factor = factor;
        if (given(sub, "--n")) o.n = n;
        if (given(sub, "--root-choice")) o.root_choice = root_choice;
    }

    try {
        if (*analyze) return cmd_analyze(path, o, std::cout);
        if (*rn) return cmd_rn(matrix, n, o, std::cout);
        if (*burnside) return cmd_burnside(matrices, o, std::cout);
        if (*cohomology) return cmd_cohomology(path, module, o, std::cout);
        if (*deform) return cmd_deform(path, cocycle, order, o, std::cout);
        if (*twist) return cmd_twist_matrix(path, o, std::cout);
    } catch (const fibrep::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fibrep::dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
