// mwb: finite monoid workbench.
//
//   mwb enumerate --order N [--up-to-iso] [--out FILE]
//   mwb check KIND FILE
//   mwb verify --suite NAME [--max-order N] [--seed S] [--jobs J] [--class C]
//   mwb search EXPR [--max-order N] [--seed S] [--jobs J] [--out FILE]

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mwb/commands.hpp"

namespace {

void add_corpus_flags(CLI::App& cmd, mwb::CorpusParams& p) {
    cmd.add_option("--seed", p.seed, "Seed for sampled orders")->capture_default_str();
    cmd.add_option("--exhaustive-up-to", p.exhaustive_up_to, "Largest order enumerated in full")->capture_default_str();
    cmd.add_option("--sample", p.sample_size, "Monoids drawn per sampled order")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace mwb;
    CLI::App app{"Finite monoid workbench: Schreier points, generalized points and verification suites"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(io::generator_version));

    commands::EnumerateArgs en;
    std::string en_out;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate monoids of one order with identity 0");
    enumerate->add_option("--order", en.order, "Monoid order")->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--up-to-iso", en.up_to_iso, "One representative per isomorphism class");
    enumerate->add_option("--out", en_out, "JSON-lines cache to write");

    std::string check_kind, check_input;
    auto* check = app.add_subcommand("check", "Decide one property of one instance");
    check->add_option("kind", check_kind, "point-schreier | gp-schreier | gp-strong | epi-schreier | epi-regular-schreier")
        ->required();
    check->add_option("input", check_input, "JSON instance file")->required();

    commands::VerifyArgs ver;
    ver.options.jobs = default_jobs();
    std::size_t ver_max = 0, ver_cap = 0;
    std::string ver_class;
    bool ver_list = false, ver_no_timing = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite ('all' runs every suite)");
    verify->add_option("--suite", ver.suite, "Suite name");
    verify->add_option("--max-order,--order", ver_max, "Largest corpus order (default: per suite)");
    verify->add_option("--jobs", ver.options.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--class", ver_class, "Class for the conditions suites: schreier-point, schreier-gp, strong-gp, all, none");
    verify->add_option("--witness-cap", ver_cap, "Largest C tried when searching for g (default: order of A)");
    verify->add_flag("--list", ver_list, "Print the suite manifest and exit");
    verify->add_flag("--no-timing", ver_no_timing, "Omit elapsed_ms");
    add_corpus_flags(*verify, ver.options.corpus);

    commands::SearchArgs se;
    se.jobs = default_jobs();
    std::string se_out;
    auto* search = app.add_subcommand("search", "Stream corpus instances satisfying a checker expression");
    search->add_option("expr", se.expr, "e.g. 'split & strong-gp & !schreier-gp'")->required();
    search->add_option("--max-order,--order", se.corpus.max_order, "Largest corpus order")->capture_default_str();
    search->add_option("--jobs", se.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    search->add_option("--out", se_out, "Write hit lines and summary here instead of stdout");
    add_corpus_flags(*search, se.corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : commands::exit_invalid;
    }

    if (*enumerate) {
        if (!en_out.empty()) en.out = en_out;
        return commands::enumerate(en, std::cout, std::cerr);
    }
    if (*check) return commands::check(check_kind, check_input, std::cout);
    if (*verify) {
        if (ver_list) {
            std::cout << verify::manifest_json().dump() << '\n';
            return commands::exit_ok;
        }
        if (ver.suite.empty()) {
            std::cerr << commands::json{{"error", "--suite is required"}}.dump() << '\n';
            return commands::exit_invalid;
        }
        if (ver_max) ver.options.max_order = ver_max;
        if (ver_cap) ver.options.witness_cap = ver_cap;
        if (!ver_class.empty()) ver.options.class_name = ver_class;
        ver.timing = !ver_no_timing;
        return commands::run_verify(ver, std::cout, std::cerr);
    }
    if (se_out.empty()) return commands::search(se, std::cout, std::cerr);
    std::ofstream file(se_out);
    if (!file) {
        std::cerr << commands::json{{"error", "cannot write " + se_out}}.dump() << '\n';
        return commands::exit_invalid;
    }
    return commands::search(se, file, std::cerr);
}
