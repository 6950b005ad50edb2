#include "concordance/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace cli = concordance::cli;

int main(int argc, char** argv) {
    CLI::App app{"Concordance genus bounds and the algebra behind them"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string table, format = "text";
    cli::Options opt;
    app.add_option("--table", table, "knot table (default: the bundled table)");
    app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--seed", opt.seed, "seed for random base functions");
    app.add_flag("--strict-milnor", opt.strict_milnor, "count every root angle of a factor");

    std::string input;
    auto* invariants = app.add_subcommand("invariants", "bounds and obstructions for one knot");
    invariants->add_option("input", input, "Alexander coefficients \"1,-3,3,-3,1\" or Seifert matrix \"0,1;2,0\"")
        ->required();

    auto* enumerate = app.add_subcommand("enumerate", "classify every knot in the table");

    cli::FormSpec spec;
    auto* metabolizers = app.add_subcommand("metabolizers", "list the metabolizers of a linking form");
    metabolizers->add_option("--prime", spec.prime, "the prime p");
    metabolizers->add_option("--hyperbolic", spec.hyperbolic, "g, for g hyperbolic planes over Z/p");
    metabolizers->add_option("--seifert", spec.seifert, "p-primary form of a Seifert matrix");
    metabolizers->add_option("--pairing", spec.pairing, "pairing matrix of fractions, \"0,1/3;1/3,0\"");

    long prime = 3;
    int max_genus = 2;
    auto* lemmas = app.add_subcommand("verify-sec4", "exhaustive sweep of the metabolizer lemmas");
    lemmas->add_option("--prime", prime, "the prime p");
    lemmas->add_option("--max-genus", max_genus, "largest g for both forms");

    int n = 2, trials = 0;
    long bound = 3;
    auto* nonconstancy = app.add_subcommand("verify-sec5", "nonconstancy on cosets of M_0");
    nonconstancy->add_option("-N,--genus", n, "genus N of the model knot (2 or 3)");
    nonconstancy->add_option("--trials", trials, "random base functions besides the zero one");
    nonconstancy->add_option("--bound", bound, "bound on the random base functions");

    auto* report = app.add_subcommand("report", "full reproduction report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::exit_code::domain;
    }
    opt.table = table;
    opt.format = cli::parse_format(format);

    cli::CommandResult r;
    if (*invariants) r = cli::invariants(input, opt);
    if (*enumerate) r = cli::enumerate(opt);
    if (*metabolizers) r = cli::metabolizers(spec, opt);
    if (*lemmas) r = cli::verify_metabolizer_lemmas(prime, max_genus, opt);
    if (*nonconstancy) r = cli::verify_nonconstancy(n, trials, bound, opt);
    if (*report) r = cli::report(opt);
    std::cout << r.output;
    if (!r.error.empty()) std::cerr << "error: " << r.error << '\n';
    return r.exit_code;
}
