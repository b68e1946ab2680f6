#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gradalg/cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace gradalg;
    using namespace gradalg::cli;

    CLI::App app{"Invariants of connected graded algebras from minimal free resolution data"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string path;
    std::size_t terms = kDefaultTerms;
    std::string format = "text";
    auto* analyze = app.add_subcommand("analyze", "Analyze one table document (JSON)");
    analyze->add_option("path", path, "Table document")->required();
    analyze->add_option("--terms", terms, "Hilbert series prefix length")->check(CLI::PositiveNumber);
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    SearchSpec spec;
    bool no_cyclotomic = false;
    bool no_positivity = false;
    std::string enum_format = "text";
    auto* enumerate = app.add_subcommand("enumerate", "Search for admissible resolution types");
    enumerate->add_option("--gldim", spec.gldim, "Global dimension d")->required();
    enumerate->add_option("--l-max", spec.l_max, "Largest top shift to search");
    enumerate->add_option("--mult-max", spec.mult_max, "Largest rank per row");
    std::size_t enum_terms = 0;
    enumerate->add_option("--terms", enum_terms, "Hilbert prefix length used for filtering (default max(64, 2 l_max))");
    enumerate->add_flag("--degree-one", spec.degree_one, "Row 1 shifts all 1");
    enumerate->add_flag("--quadratic", spec.quadratic, "Row 2 shifts all 2");
    enumerate->add_flag("--gorenstein", spec.require_gorenstein, "Gorenstein-symmetric tables only");
    enumerate->add_flag("--monotonic", spec.require_monotonic, "Monotonic tables only");
    enumerate->add_flag("--no-cyclotomic", no_cyclotomic, "Keep tables of infinite GK dimension");
    enumerate->add_flag("--no-positivity", no_positivity, "Keep negative or gapped Hilbert prefixes");
    enumerate->add_option("--budget", spec.budget, "Largest raw search space allowed");
    enumerate->add_option("--threads", spec.threads, "Worker threads (0 = all cores)");
    enumerate->add_option("--format", enum_format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* corpus = app.add_subcommand("corpus", "Check the bundled resolution corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitMalformed;
    }

    if (*analyze) return cmd_analyze(path, terms, parse_format(format), std::cout, std::cerr);
    if (*enumerate) {
        spec.require_cyclotomic = !no_cyclotomic;
        spec.require_positive_nogap = !no_positivity;
        spec.terms = enum_terms != 0 ? enum_terms : std::max<std::size_t>(kDefaultTerms, 2 * static_cast<std::size_t>(std::max(0, spec.l_max)));
        return cmd_enumerate(spec, parse_format(enum_format), std::cout, std::cerr);
    }
    if (*corpus) return cmd_corpus(builtin_corpus(), std::cout, std::cerr);
    return kExitMalformed;
}
