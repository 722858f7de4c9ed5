// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Usage: mwb_acceptance [path/to/mwb]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mwb/mwb.hpp"
#include "oracles.hpp"

using namespace mwb;
using json = nlohmann::json;

namespace {

// Time limits in seconds and corpus bounds.
constexpr double enumeration_limit_s = 10.0;
constexpr std::size_t min_cospans = 100;
constexpr double remark_limit_s = 60.0;
constexpr double regular_schreier_limit_s = 300.0;
constexpr std::size_t two_object_order = 4;
constexpr std::size_t four_carrier_order = 3;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_s(double s) {
    std::ostringstream o;
    o.precision(3);
    o << s << " s";
    return o.str();
}

verify::Report run(const std::string& suite, std::size_t order, std::optional<std::string> cls = std::nullopt) {
    verify::SuiteOptions opt;
    opt.max_order = order;
    opt.jobs = default_jobs();
    opt.class_name = std::move(cls);
    return verify::run_suite(suite, opt);
}

std::string summary(const verify::Report& r) {
    return r.suite + ": " + std::to_string(r.checked) + " checked, " + std::to_string(r.violations.size()) +
           " violations, " + fmt_s(r.elapsed_ms / 1000);
}

Outcome enumeration_counts() {
    const std::vector<std::size_t> expected{1, 2, 7, 35};
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string counts;
    for (std::size_t n = 1; n <= expected.size(); ++n) {
        const auto got = enumerate_monoids(n, true).size();
        const auto naive = oracle::count_up_to_iso(n);
        ok = ok && got == expected[n - 1] && got == naive;
        counts += (n > 1 ? "," : "") + std::to_string(got);
    }
    const double s = seconds_since(t0);
    return {ok && s < enumeration_limit_s,
            "counts " + counts + " (naive oracle agrees: " + (ok ? "yes" : "no") + "), " + fmt_s(s) + " incl. oracle"};
}

// Unique factorization is shown directly: the projections are jointly
// injective (uniqueness) and the pairing t -> (p(t), q(t)) lands in the
// carrier and is a homomorphism (existence). Homs come from the naive
// all-maps oracle.
Outcome pullback_universal_property() {
    std::vector<MonoidPtr> objs;
    for (std::size_t n = 1; n <= 3; ++n)
        for (auto& m : enumerate_monoids(n, true)) objs.push_back(share(std::move(m)));
    const std::size_t k = objs.size();
    std::vector<std::vector<std::vector<Elem>>> homs(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) homs[i * k + j] = oracle::all_hom_maps(*objs[i], *objs[j]);
    auto h = [&](std::size_t i, std::size_t j) -> const auto& { return homs[i * k + j]; };

    std::size_t cospans = 0, cones = 0, violations = 0;
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t x = 0; x < k; ++x)
                for (const auto& fm : h(a, b))
                    for (const auto& xm : h(x, b)) {
                        ++cospans;
                        auto f = Hom::assume_valid(objs[a], objs[b], fm);
                        auto xh = Hom::assume_valid(objs[x], objs[b], xm);
                        auto pb = pullback(Cospan(f, xh));
                        const Monoid& p = *pb.object;
                        for (Elem u = 0; u < p.order(); ++u)
                            for (Elem v = u + 1; v < p.order(); ++v)
                                if (pb.first(u) == pb.first(v) && pb.second(u) == pb.second(v)) ++violations;
                        for (std::size_t t = 0; t < k; ++t)
                            for (const auto& pm : h(t, a))
                                for (const auto& qm : h(t, x)) {
                                    const Monoid& tm = *objs[t];
                                    bool commutes = true;
                                    for (Elem e = 0; e < tm.order() && commutes; ++e) commutes = fm[pm[e]] == xm[qm[e]];
                                    if (!commutes) continue;
                                    ++cones;
                                    std::vector<Elem> u(tm.order());
                                    bool exists = true;
                                    for (Elem e = 0; e < tm.order() && exists; ++e) {
                                        std::size_t hits = 0;
                                        for (Elem w = 0; w < p.order(); ++w)
                                            if (pb.first(w) == pm[e] && pb.second(w) == qm[e]) u[e] = w, ++hits;
                                        exists = hits == 1;
                                    }
                                    for (Elem e = 0; e < tm.order() && exists; ++e)
                                        for (Elem d = 0; d < tm.order() && exists; ++d)
                                            exists = u[tm.op(e, d)] == p.op(u[e], u[d]);
                                    exists = exists && u[tm.identity()] == p.identity();
                                    if (!exists) ++violations;
                                }
                    }
    return {cospans >= min_cospans && violations == 0,
            std::to_string(cospans) + " cospans, " + std::to_string(cones) + " cones from order <= 3, " +
                std::to_string(violations) + " violations"};
}

Outcome definition_agreement() {
    Corpus c(CorpusParams{.max_order = two_object_order}, default_jobs());
    std::size_t total = 0, agree = 0;
    auto tally = [&](bool same) { ++total, agree += same; };
    for (const auto& p : c.points()) tally(is_schreier_point(p) == is_schreier_point_literal(p));
    for (const auto& gp : c.generalized_points()) {
        tally(is_schreier_gp(gp) == is_schreier_gp_literal(gp));
        tally(is_strong_gp(gp) == is_strong_gp_literal(gp));
    }
    for (const auto& f : c.surjections()) {
        for (Elem b = 0; b < f.cod()->order(); ++b) tally(representatives(f, b) == representatives_literal(f, b));
        tally(is_schreier_epi(f) == is_schreier_epi_literal(f));
        tally(is_regular_schreier_epi(f) == is_regular_schreier_epi_literal(f));
    }
    return {total > 0 && agree == total, std::to_string(agree) + "/" + std::to_string(total) +
                                             " decisions and witnesses agree (points, GPs, surjections, order <= 4)"};
}

Outcome remark_suite() {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = run("remark-4-4", two_object_order);
    const double s = seconds_since(t0);
    return {r.passed() && s < remark_limit_s,
            summary(r) + ", " + fmt_s(s) + " with corpus build (limit " + fmt_s(remark_limit_s) + ")"};
}

Outcome canonical_point_biconditional() {
    Corpus c(CorpusParams{.max_order = two_object_order}, default_jobs());
    std::size_t expected = c.generalized_points().size();
    for (const auto& f : c.surjections()) expected += is_regular_schreier_epi(f).holds;
    auto r = run("thm-4-5", two_object_order);
    return {r.passed() && r.checked == expected,
            summary(r) + " (expected " + std::to_string(expected) + ": every GP plus every witness-built GP)"};
}

Outcome regular_schreier_suites() {
    const auto t0 = std::chrono::steady_clock::now();
    auto a = run("thm-4-6", two_object_order);
    auto b = run("cor-4-7", two_object_order);
    const double s = seconds_since(t0);
    const bool witnesses = a.checks.count("only-if:witness-g") && a.checks.at("only-if:witness-g") == a.stats.at("regular");
    return {a.passed() && b.passed() && witnesses && s < regular_schreier_limit_s,
            summary(a) + "; " + summary(b) + "; witness_g revalidated for " +
                std::to_string(a.checks.count("only-if:witness-g") ? a.checks.at("only-if:witness-g") : 0) +
                " regular epis; " + fmt_s(s) + " with corpus builds (limit " + fmt_s(regular_schreier_limit_s) + ")"};
}

Outcome strongness_suites() {
    bool ok = true;
    std::string detail;
    for (const char* s : {"thm-2-4", "prop-2-5", "cor-2-6"}) {
        auto r = run(s, four_carrier_order);
        ok = ok && r.passed() && r.checked > 0;
        detail += (detail.empty() ? "" : "; ") + summary(r);
    }
    return {ok, detail};
}

Outcome round_trip_suite() {
    auto r = run("thm-3-4", two_object_order);
    const bool both = r.checks.count("iii:GF(T)=T") && r.checks.count("iv:FG(S)=S");
    return {r.passed() && both, summary(r)};
}

Outcome closure_suites() {
    auto p = run("conditions-point", four_carrier_order, "schreier-point");
    auto g = run("conditions-gp", four_carrier_order, "schreier-gp");
    bool exercised = true;
    for (const char* c : {"a:pullback", "b:product", "b:terminal", "b:equalizer", "c:strong"})
        exercised = exercised && p.checks.count(c) && g.checks.count(c);
    exercised = exercised && g.checks.count("d:canonical");
    return {p.passed() && g.passed() && exercised,
            summary(p) + "; " + summary(g) + "; equalizers leaving GPt: " + std::to_string(g.stats["equalizer_not_gp"]) +
                " of " + std::to_string(g.stats["equalizers"])};
}

std::optional<std::string> capture(const std::string& cmd) {
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return std::nullopt;
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    if (::pclose(pipe) != 0) return std::nullopt;
    return out;
}

Outcome search_soundness(const std::string& binary) {
    if (binary.empty()) return {false, "no mwb binary given"};
    const std::vector<std::pair<std::string, std::string>> runs{
        {"schreier-epi & !regular-schreier", "--max-order 5"},
        {"split & strong-gp & !schreier-gp", "--max-order 4"},
        {"split & !schreier-point", "--max-order 3"},
        {"!strong-gp | regular-schreier", "--max-order 3 --seed 7"},
    };
    std::size_t hits = 0, bad = 0;
    bool identical = true;
    for (const auto& [expr, flags] : runs) {
        const std::string cmd = "'" + binary + "' search '" + expr + "' " + flags;
        auto first = capture(cmd + " --jobs 1");
        auto second = capture(cmd + " --jobs 4");
        auto third = capture(cmd);
        if (!first || !second || !third) return {false, "search failed: " + cmd};
        identical = identical && *first == *second && *first == *third;
        auto e = Expr::parse(expr);
        std::istringstream lines(*first);
        std::string line;
        std::size_t emitted = 0;
        json last;
        while (std::getline(lines, line)) {
            last = json::parse(line);
            if (last.contains("summary")) break;
            ++emitted;
            if (!verify::revalidate_hit(e, last.at("kind"), last.at("instance"))) ++bad;
        }
        if (!last.contains("summary") || last["summary"]["hits"] != emitted) ++bad;
        hits += emitted;
    }
    return {identical && bad == 0, std::to_string(hits) + " hits over " + std::to_string(runs.size()) +
                                       " searches, " + std::to_string(bad) + " failed revalidation, repeated runs " +
                                       (identical ? "byte-identical" : "DIFFER")};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"enumeration counts 1,2,7,35 vs naive oracle, < 10 s", enumeration_counts},
        {"pullback universal property on >= 100 cospans", pullback_universal_property},
        {"optimized checkers agree with literal scans, order <= 4", definition_agreement},
        {"Schreier GP implies strong, order <= 4, < 60 s", remark_suite},
        {"Schreier GP iff Schreier canonical point, order <= 4", canonical_point_biconditional},
        {"regular Schreier epi iff a Schreier GP (f, g) exists, order <= 4, < 300 s", regular_schreier_suites},
        {"strongness statements, order <= 3", strongness_suites},
        {"GF(T) = T and FG(S) = S, order <= 4", round_trip_suite},
        {"closure conditions for Schreier points and GPs, order <= 3", closure_suites},
        {"search hits revalidate; repeated runs byte-identical", [&] { return search_soundness(binary); }},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << "  ["
                  << o.detail << "]" << std::endl;
    }
    std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
    return all ? 0 : 1;
}
