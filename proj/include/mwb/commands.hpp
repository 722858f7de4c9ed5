#pragma once

// The four subcommands as plain functions over streams. Each returns the
// process exit status:
//
//   enumerate  0 done, 2 bad order or unwritable output
//   check      0 holds, 1 fails, 2 invalid input
//   verify     0 no violations, 1 violations, 2 unknown suite or class
//   search     0 finished (hits or not), 2 bad expression

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "mwb/enumerate.hpp"
#include "mwb/expr.hpp"
#include "mwb/io.hpp"
#include "mwb/points.hpp"
#include "mwb/verify.hpp"

namespace mwb::commands {

using json = nlohmann::json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_invalid = 2;

inline json error_json(const std::exception& e) {
    json j{{"error", e.what()}};
    if (auto* m = dynamic_cast<const InvalidMonoid*>(&e)) j["witness"] = m->witness;
    if (auto* h = dynamic_cast<const InvalidHom*>(&e); h && !h->witness.empty()) j["witness"] = h->witness;
    return j;
}

struct EnumerateArgs {
    std::size_t order = 1;
    bool up_to_iso = false;
    std::optional<std::filesystem::path> out;
};

/// Writes a header line and one monoid per line to `args.out` when given,
/// and prints {"order", "up_to_iso", "count"}.
inline int enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.order == 0) throw ParseError("order must be at least 1");
        std::ofstream file;
        if (args.out) {
            file.open(*args.out);
            if (!file) throw Error("cannot write " + args.out->string());
            file << io::cache_header(args.order, args.up_to_iso).dump() << '\n';
        }
        std::size_t count = 0;
        for_each_monoid(args.order, args.up_to_iso, [&](const Monoid& m) {
            ++count;
            if (file.is_open()) file << io::to_json(m).dump() << '\n';
        });
        if (file.is_open()) {
            file.close();
            if (!file) throw Error("write failed: " + args.out->string());
        }
        out << json{{"order", args.order}, {"up_to_iso", args.up_to_iso}, {"count", count}}.dump() << '\n';
        return exit_ok;
    } catch (const std::exception& e) {
        err << error_json(e).dump() << '\n';
        return exit_invalid;
    }
}

inline const std::vector<std::string>& check_kinds() {
    static const std::vector<std::string> kinds{"point-schreier", "gp-schreier", "gp-strong", "epi-schreier",
                                                "epi-regular-schreier"};
    return kinds;
}

/// Input: a point {"f", "s"}, a generalized point {"f", "g"}, or for the
/// epi kinds a hom {"dom", "cod", "map"} (also accepted wrapped as {"f"}).
/// Witnesses use the element labels of the input file.
inline int check(const std::string& kind, const std::filesystem::path& input, std::ostream& out) {
    try {
        const auto j = io::read_json_file(input);
        const auto base = input.parent_path();
        CheckResult r;
        if (kind == "point-schreier") {
            r = is_schreier_point(io::point_from_json(j, base));
        } else if (kind == "gp-schreier") {
            r = is_schreier_gp(io::gp_from_json(j, base));
        } else if (kind == "gp-strong") {
            r = is_strong_gp(io::gp_from_json(j, base));
        } else if (kind == "epi-schreier" || kind == "epi-regular-schreier") {
            auto f = io::hom_from_json(j.is_object() && j.contains("f") ? j.at("f") : j, base);
            r = kind == "epi-schreier" ? is_schreier_epi(f) : is_regular_schreier_epi(f);
        } else {
            throw ParseError("unknown check kind: " + kind);
        }
        out << io::to_json(r).dump() << '\n';
        return r.holds ? exit_ok : exit_fail;
    } catch (const std::exception& e) {
        out << error_json(e).dump() << '\n';
        return exit_invalid;
    }
}

struct VerifyArgs {
    std::string suite;
    verify::SuiteOptions options;
    bool timing = true;
};

inline int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    verify::Report report;
    try {
        report = verify::run_suite(args.suite, args.options);
    } catch (const std::exception& e) {
        err << error_json(e).dump() << '\n';
        return exit_invalid;
    }
    out << report.to_json(args.timing).dump() << '\n';
    return report.passed() ? exit_ok : exit_fail;
}

struct SearchArgs {
    std::string expr;
    CorpusParams corpus;
    std::size_t jobs = 1;
};

/// One JSON line per hit, then a summary line.
inline int search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
    std::optional<Expr> e;
    try {
        e = Expr::parse(args.expr);
        if (args.corpus.max_order == 0) throw ParseError("max order must be at least 1");
    } catch (const std::exception& ex) {
        err << error_json(ex).dump() << '\n';
        return exit_invalid;
    }
    Corpus corpus(args.corpus, args.jobs);
    std::size_t n = 0;
    auto summary = verify::search(*e, corpus, args.jobs, [&](json hit) {
        hit["hit"] = n++;
        out << hit.dump() << '\n';
    });
    out << summary.to_json(args.corpus).dump() << '\n';
    return exit_ok;
}

}  // namespace mwb::commands
