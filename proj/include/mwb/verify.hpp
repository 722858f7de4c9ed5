#pragma once

// Verification suites over a corpus, plus expression-driven search.
//
// Every suite fans instances out over the worker pool, records a violation
// instead of stopping, and sorts violations by their serialized form so a
// report does not depend on scheduling. Each violation carries a
// "confirmed" flag: whether the definition-literal checkers, rerun on the
// same instance, reproduce the failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mwb/constructions.hpp"
#include "mwb/corpus.hpp"
#include "mwb/expr.hpp"
#include "mwb/io.hpp"
#include "mwb/parallel.hpp"
#include "mwb/points.hpp"

namespace mwb::verify {

using json = nlohmann::json;

struct SuiteOptions {
    CorpusParams corpus;                      // max_order is replaced by the suite default unless set below
    std::optional<std::size_t> max_order;     // overrides every suite's default
    std::size_t jobs = 1;
    std::optional<std::string> class_name;    // conditions suites only
    std::optional<std::size_t> witness_cap;   // thm-4-6 / cor-4-7: largest C tried; default |A|
};

struct Report {
    std::string suite;
    json params = json::object();
    std::size_t checked = 0;
    std::vector<json> violations;
    std::map<std::string, std::size_t> stats;
    std::map<std::string, std::size_t> checks;  // instances per named check
    std::vector<Report> parts;  // filled for "all"
    double elapsed_ms = 0;

    bool passed() const noexcept { return violations.empty(); }

    json to_json(bool with_timing = true) const {
        json j{{"suite", suite},
               {"params", params},
               {"checked", checked},
               {"passed", passed()},
               {"violations", violations},
               {"stats", stats},
               {"checks", checks}};
        if (!parts.empty()) {
            json sub = json::array();
            for (const auto& p : parts) sub.push_back(p.to_json(with_timing));
            j["suites"] = std::move(sub);
        }
        if (with_timing) j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

namespace detail {

/// Per-instance accumulator; merged in instance order.
struct Tally {
    std::size_t checked = 0;
    std::vector<json> violations;
    std::map<std::string, std::size_t> counts;
    std::map<std::string, std::size_t> checks;

    void count(const std::string& key, std::size_t by = 1) { counts[key] += by; }

    void expect(bool ok, const char* check, json instance, const std::function<bool()>& literal) {
        ++checked;
        ++checks[check];
        if (ok) return;
        violations.push_back(json{{"check", check}, {"instance", std::move(instance)}, {"confirmed", literal()}});
    }
};

inline Report finish(std::string suite, const Corpus& corpus, std::vector<Tally> tallies,
                     std::chrono::steady_clock::time_point start, json extra = json::object()) {
    Report r;
    r.suite = std::move(suite);
    const auto& p = corpus.params();
    r.params = json{{"max_order", p.max_order},
                    {"exhaustive_up_to", p.exhaustive_up_to},
                    {"sample_size", p.sample_size},
                    {"seed", p.seed}};
    r.params.update(extra);
    for (auto& t : tallies) {
        r.checked += t.checked;
        for (auto& v : t.violations) r.violations.push_back(std::move(v));
        for (auto& [k, n] : t.counts) r.stats[k] += n;
        for (auto& [k, n] : t.checks) r.checks[k] += n;
    }
    std::sort(r.violations.begin(), r.violations.end(),
              [](const json& a, const json& b) { return a.dump() < b.dump(); });
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

template <class Item, class Fn>
std::vector<Tally> fan_out(const std::vector<Item>& items, std::size_t jobs, Fn&& fn) {
    return parallel_map<Tally>(items.size(), jobs, [&](std::size_t i) {
        Tally t;
        fn(items[i], t);
        return t;
    });
}

/// Homs into `b` from every corpus monoid, in corpus order.
inline std::vector<Hom> homs_into(const Corpus& corpus, const MonoidPtr& b) {
    const auto j = corpus.index_of(b);
    std::vector<Hom> out;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (const auto& h : corpus.homs(i, j)) out.push_back(h);
    return out;
}

inline bool factors(const Hom& g, const Hom& h, const Hom& s) {
    for (Elem b = 0; b < s.dom()->order(); ++b)
        if (g(h(b)) != s(b)) return false;
    return true;
}

/// Same membership test as `c`, run with the definition-literal checkers.
inline ClassPredicate literal_class(const ClassPredicate& c) {
    if (c.name() == "schreier-point")
        return ClassPredicate::of_points(c.name(), [](const Point& p) { return is_schreier_point_literal(p).holds; });
    if (c.name() == "schreier-gp")
        return ClassPredicate::of_gps(c.name(), [](const GeneralizedPoint& g) { return is_schreier_gp_literal(g).holds; });
    if (c.name() == "strong-gp")
        return ClassPredicate::of_gps(c.name(), [](const GeneralizedPoint& g) { return is_strong_gp_literal(g).holds; });
    return c;
}

inline json morphism_json(const GPMorphism& m) {
    return json{{"alpha", io::to_json(m.alpha())}, {"beta", io::to_json(m.beta())}, {"gamma", io::to_json(m.gamma())}};
}

/// Every morphism (alpha, beta, gamma) between two corpus GPs.
inline std::vector<GPMorphism> gp_morphisms(const Corpus& corpus, const GeneralizedPoint& s, const GeneralizedPoint& t) {
    const auto ai = corpus.index_of(s.f().dom()), aj = corpus.index_of(t.f().dom());
    const auto bi = corpus.index_of(s.f().cod()), bj = corpus.index_of(t.f().cod());
    const auto ci = corpus.index_of(s.g().dom()), cj = corpus.index_of(t.g().dom());
    std::vector<GPMorphism> out;
    for (const auto& alpha : corpus.homs(ai, aj))
        for (const auto& beta : corpus.homs(bi, bj)) {
            if (compose(beta, s.f()) != compose(t.f(), alpha)) continue;
            for (const auto& gamma : corpus.homs(ci, cj))
                if (compose(alpha, s.g()) == compose(t.g(), gamma))
                    out.push_back(GPMorphism::make(s, t, alpha, beta, gamma));
        }
    return out;
}

/// Morphisms of points: gamma is beta.
inline std::vector<GPMorphism> point_morphisms(const Corpus& corpus, const Point& s, const Point& t) {
    const auto ai = corpus.index_of(s.total()), aj = corpus.index_of(t.total());
    const auto bi = corpus.index_of(s.base()), bj = corpus.index_of(t.base());
    std::vector<GPMorphism> out;
    for (const auto& alpha : corpus.homs(ai, aj))
        for (const auto& beta : corpus.homs(bi, bj))
            if (compose(beta, s.f()) == compose(t.f(), alpha) && compose(alpha, s.s()) == compose(t.s(), beta))
                out.push_back(GPMorphism::make(as_generalized(s), as_generalized(t), alpha, beta, beta));
    return out;
}

}  // namespace detail

/// Pulling back along a surjection x: if Ker pi2 and g x 1 generate
/// A x_B X, then Ker f and g generate A.
inline Report suite_thm_2_4(const Corpus& corpus, const SuiteOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    auto gps = corpus.generalized_points();
    auto tallies = detail::fan_out(gps, opt.jobs, [&](const GeneralizedPoint& gp, detail::Tally& t) {
        for (const auto& x : detail::homs_into(corpus, gp.f().cod())) {
            if (!x.is_surjective()) continue;
            t.count("pullbacks");
            auto pb = pullback_gp(gp, x);
            const bool hyp = jointly_strongly_epic(pb.total.object, {kernel(pb.result.f()), image(pb.result.g())});
            if (!hyp) continue;
            t.count("hypothesis_held");
            t.expect(is_strong_gp(gp).holds, "implication", json{{"gp", io::to_json(gp)}, {"along", io::to_json(x)}},
                     [&] { return is_strong_gp_literal(pb.result).holds && !is_strong_gp_literal(gp).holds; });
        }
    });
    return detail::finish("thm-2-4", corpus, std::move(tallies), start);
}

/// Triangles f g h = 1_B: if Ker f and s = g h generate A, (f, g) is strong.
inline Report suite_prop_2_5(const Corpus& corpus, const SuiteOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    auto points = corpus.points();
    auto tallies = detail::fan_out(points, opt.jobs, [&](const Point& p, detail::Tally& t) {
        const bool hyp = jointly_strongly_epic(p.total(), {kernel(p.f()), image(p.s())});
        const auto a = corpus.index_of(p.total()), b = corpus.index_of(p.base());
        for (std::size_t c = 0; c < corpus.size(); ++c)
            for (const auto& h : corpus.homs(b, c))
                for (const auto& g : corpus.homs(c, a)) {
                    if (!detail::factors(g, h, p.s())) continue;
                    t.count("triangles");
                    if (!hyp) continue;
                    t.count("hypothesis_held");
                    auto gp = GeneralizedPoint::assume_valid(p.f(), g);
                    t.expect(is_strong_gp(gp).holds, "implication",
                             json{{"point", io::to_json(p)}, {"h", io::to_json(h)}, {"g", io::to_json(g)}}, [&] {
                                 return is_strong_gp_literal(as_generalized(p)).holds && !is_strong_gp_literal(gp).holds;
                             });
                }
    });
    return detail::finish("prop-2-5", corpus, std::move(tallies), start);
}

/// If <g, 1_C> and Ker pi2 generate A x_B C, then (f, g) is strong.
inline Report suite_cor_2_6(const Corpus& corpus, const SuiteOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    auto gps = corpus.generalized_points();
    auto tallies = detail::fan_out(gps, opt.jobs, [&](const GeneralizedPoint& gp, detail::Tally& t) {
        auto cp = canonical_point(gp);
        t.count("gps");
        if (!jointly_strongly_epic(cp.point.total(), {image(cp.point.s()), kernel(cp.point.f())})) return;
        t.count("hypothesis_held");
        t.expect(is_strong_gp(gp).holds, "implication", json{{"gp", io::to_json(gp)}}, [&] {
            return is_strong_gp_literal(as_generalized(cp.point)).holds && !is_strong_gp_literal(gp).holds;
        });
    });
    return detail::finish("cor-2-6", corpus, std::move(tallies), start);
}

/// Closure conditions for a class of points: (a) pullback stability,
/// (b) terminal, binary products and equalizers, (c) strongness.
inline Report suite_conditions_point(const ClassPredicate& cls, const Corpus& corpus, const SuiteOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const auto lit = detail::literal_class(cls);
    std::vector<Point> members;
    for (auto& p : corpus.points())
        if (cls.contains(p)) members.push_back(std::move(p));

    auto tallies = detail::fan_out(members, opt.jobs, [&](const Point& p, detail::Tally& t) {
        for (const auto& x : detail::homs_into(corpus, p.base())) {
            auto q = pullback_point(p, x);
            t.expect(cls.contains(q), "a:pullback", json{{"point", io::to_json(p)}, {"along", io::to_json(x)}},
                     [&] { return lit.contains(p) && !lit.contains(q); });
        }
        for (const auto& other : members) {
            auto prod = product_point(p, other);
            t.expect(cls.contains(prod), "b:product", json{{"left", io::to_json(p)}, {"right", io::to_json(other)}},
                     [&] { return !lit.contains(prod); });
            auto ms = detail::point_morphisms(corpus, p, other);
            for (std::size_t i = 0; i < ms.size(); ++i)
                for (std::size_t j = i + 1; j < ms.size(); ++j) {
                    auto eq = equalizer_gp(ms[i], ms[j]);
                    t.count("equalizers");
                    auto e = eq.gp ? as_point(*eq.gp) : std::nullopt;
                    t.expect(e.has_value() && cls.contains(*e), "b:equalizer",
                             json{{"source", io::to_json(p)},
                                  {"target", io::to_json(other)},
                                  {"m1", detail::morphism_json(ms[i])},
                                  {"m2", detail::morphism_json(ms[j])}},
                             [&] { return !e || !lit.contains(*e); });
                }
        }
        auto gp = as_generalized(p);
        auto strong = is_strong_gp(gp);
        t.expect(strong.holds, "c:strong", json{{"point", io::to_json(p)}, {"witness", io::witness_json(strong.witness)}},
                 [&] { return !is_strong_gp_literal(gp).holds; });
    });
    detail::Tally once;
    once.expect(cls.contains(terminal_point()), "b:terminal", json{{"point", io::to_json(terminal_point())}},
                [&] { return !lit.contains(terminal_point()); });
    once.count("members", members.size());
    tallies.push_back(std::move(once));
    return detail::finish("conditions-point", corpus, std::move(tallies), start, json{{"class", cls.name()}});
}

/// Closure conditions for a class of generalized points: (a)-(c) as for
/// points, equalizers counted separately when the composite is not
/// surjective, and (d): a GP is in the class iff its canonical point is.
inline Report suite_conditions_gp(const ClassPredicate& cls, const Corpus& corpus, const SuiteOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const auto lit = detail::literal_class(cls);
    const auto all = corpus.generalized_points();
    std::vector<GeneralizedPoint> members;
    for (const auto& gp : all)
        if (cls.contains(gp)) members.push_back(gp);

    auto tallies = detail::fan_out(members, opt.jobs, [&](const GeneralizedPoint& gp, detail::Tally& t) {
        for (const auto& x : detail::homs_into(corpus, gp.f().cod())) {
            auto r = pullback_gp(gp, x).result;
            t.expect(cls.contains(r), "a:pullback", json{{"gp", io::to_json(gp)}, {"along", io::to_json(x)}},
                     [&] { return lit.contains(gp) && !lit.contains(r); });
        }
        for (const auto& other : members) {
            auto prod = product_gp(gp, other);
            t.expect(cls.contains(prod), "b:product", json{{"left", io::to_json(gp)}, {"right", io::to_json(other)}},
                     [&] { return !lit.contains(prod); });
            auto ms = detail::gp_morphisms(corpus, gp, other);
            for (std::size_t i = 0; i < ms.size(); ++i)
                for (std::size_t j = i + 1; j < ms.size(); ++j) {
                    auto eq = equalizer_gp(ms[i], ms[j]);
                    t.count("equalizers");
                    if (!eq.gp) {
                        t.count("equalizer_not_gp");
                        continue;
                    }
                    t.expect(cls.contains(*eq.gp), "b:equalizer",
                             json{{"source", io::to_json(gp)},
                                  {"target", io::to_json(other)},
                                  {"m1", detail::morphism_json(ms[i])},
                                  {"m2", detail::morphism_json(ms[j])}},
                             [&] { return !lit.contains(*eq.gp); });
                }
        }
        auto strong = is_strong_gp(gp);
        t.expect(strong.holds, "c:strong", json{{"gp", io::to_json(gp)}, {"witness", io::witness_json(strong.witness)}},
                 [&] { return !is_strong_gp_literal(gp).holds; });
    });
    auto canonical = detail::fan_out(all, opt.jobs, [&](const GeneralizedPoint& gp, detail::Tally& t) {
        auto top = as_generalized(canonical_point(gp).point);
        t.expect(cls.contains(gp) == cls.contains(top), "d:canonical", json{{"gp", io::to_json(gp)}},
                 [&] { return lit.contains(gp) != lit.contains(top); });
    });
    for (auto& c : canonical) tallies.push_back(std::move(c));
    detail::Tally once;
    once.expect(cls.contains(terminal_gp()), "b:terminal", json{{"gp", io::to_json(terminal_gp())}},
                [&] { return !lit.contains(terminal_gp()); });
    once.count("members", members.size());
    tallies.push_back(std::move(once));
    return detail::finish("conditions-gp", corpus, std::move(tallies), start, json{{"class", cls.name()}});
}

/// Round trips of the class maps with S = Schreier points and
/// T = Schreier GPs: GF(T) agrees with T, FG(S) agrees with S.
inline Report suite_thm_3_4(const Corpus& corpus, const SuiteOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const auto s = classes::schreier_points();
    const auto t_cls = classes::schreier_gps();
    const auto gf = map_G(map_F(t_cls));
    const auto fg = map_F(map_G(s));
    auto tallies = detail::fan_out(corpus.generalized_points(), opt.jobs, [&](const GeneralizedPoint& gp, detail::Tally& t) {
        t.expect(gf.contains(gp) == t_cls.contains(gp), "iii:GF(T)=T", json{{"gp", io::to_json(gp)}}, [&] {
            auto top = as_generalized(canonical_point(gp).point);
            return is_schreier_gp_literal(top).holds != is_schreier_gp_literal(gp).holds;
        });
    });
    auto points = detail::fan_out(corpus.points(), opt.jobs, [&](const Point& p, detail::Tally& t) {
        t.expect(fg.contains(p) == s.contains(p), "iv:FG(S)=S", json{{"point", io::to_json(p)}}, [&] {
            auto top = canonical_point(as_generalized(p)).point;
            return is_schreier_point_literal(top).holds != is_schreier_point_literal(p).holds;
        });
    });
    for (auto& x : points) tallies.push_back(std::move(x));
    return detail::finish("thm-3-4", corpus, std::move(tallies), start);
}

/// A GP is Schreier iff its canonical point is, on every corpus GP and on
/// every GP built by witness_g.
inline Report suite_thm_4_5(const Corpus& corpus, const SuiteOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    auto check = [](const GeneralizedPoint& gp, const char* family, detail::Tally& t) {
        auto cp = canonical_point(gp);
        const bool lhs = is_schreier_gp(gp).holds;
        if (lhs) t.count("schreier_gps");
        t.expect(lhs == is_schreier_point(cp.point).holds, family, json{{"gp", io::to_json(gp)}}, [&] {
            return is_schreier_gp_literal(gp).holds != is_schreier_point_literal(cp.point).holds;
        });
    };
    auto tallies = detail::fan_out(corpus.generalized_points(), opt.jobs, [&](const GeneralizedPoint& gp, detail::Tally& t) {
        check(gp, gp.is_split() ? "split" : "enumerated", t);
    });
    auto built = detail::fan_out(corpus.surjections(), opt.jobs, [&](const Hom& f, detail::Tally& t) {
        if (auto w = witness_g(f)) check(*w, "witness-built", t);
    });
    for (auto& b : built) tallies.push_back(std::move(b));
    return detail::finish("thm-4-5", corpus, std::move(tallies), start);
}

namespace detail {

/// First (C, g) in corpus order with |C| <= cap, f g surjective and
/// `accept(f, g)`.
template <class Accept>
std::optional<Hom> find_g(const Corpus& corpus, const Hom& f, std::size_t cap, Accept&& accept) {
    const auto a = corpus.index_of(f.dom());
    for (std::size_t c = 0; c < corpus.size(); ++c) {
        if (corpus.monoids()[c]->order() > cap) continue;
        for (const auto& g : corpus.homs(c, a))
            if (compose(f, g).is_surjective() && accept(GeneralizedPoint::assume_valid(f, g))) return g;
    }
    return std::nullopt;
}

inline std::size_t witness_cap(const SuiteOptions& opt, const Hom& f) { return opt.witness_cap.value_or(f.dom()->order()); }

}  // namespace detail

/// f is regular Schreier iff some g makes (f, g) a Schreier GP. The "some
/// g" side is searched over corpus monoids C of order at most the cap.
inline Report suite_thm_4_6(const Corpus& corpus, const SuiteOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    auto tallies = detail::fan_out(corpus.surjections(), opt.jobs, [&](const Hom& f, detail::Tally& t) {
        const auto cap = detail::witness_cap(opt, f);
        const bool regular = is_regular_schreier_epi(f).holds;
        auto g = detail::find_g(corpus, f, cap, [](const GeneralizedPoint& gp) { return is_schreier_gp(gp).holds; });
        if (regular) t.count("regular");
        if (g) t.count("g_found");
        if (g) {
            t.expect(regular, "if:schreier-gp-implies-regular", json{{"f", io::to_json(f)}, {"g", io::to_json(*g)}}, [&] {
                return is_schreier_gp_literal(GeneralizedPoint::assume_valid(f, *g)).holds &&
                       !is_regular_schreier_epi_literal(f).holds;
            });
        }
        if (regular) {
            std::optional<GeneralizedPoint> w;
            bool revalidates = false;
            try {
                w = witness_g(f);
                revalidates = w && is_schreier_gp_literal(GeneralizedPoint::make(w->f(), w->g())).holds;
            } catch (const Error&) {
                revalidates = false;
            }
            t.expect(revalidates, "only-if:witness-g", json{{"f", io::to_json(f)}},
                     [&] { return is_regular_schreier_epi_literal(f).holds; });
            t.expect(is_schreier_epi(f).holds, "regular-implies-schreier-epi", json{{"f", io::to_json(f)}},
                     [&] { return !is_schreier_epi_literal(f).holds; });
        }
    });
    return detail::finish("thm-4-6", corpus, std::move(tallies), start,
                          json{{"witness_cap", opt.witness_cap ? json(*opt.witness_cap) : json("order of A")}});
}

/// f is regular Schreier iff some g with f g surjective has a Schreier
/// canonical point.
inline Report suite_cor_4_7(const Corpus& corpus, const SuiteOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    auto tallies = detail::fan_out(corpus.surjections(), opt.jobs, [&](const Hom& f, detail::Tally& t) {
        const auto cap = detail::witness_cap(opt, f);
        const bool regular = is_regular_schreier_epi(f).holds;
        auto g = detail::find_g(corpus, f, cap, [](const GeneralizedPoint& gp) {
            return is_schreier_point(canonical_point(gp).point).holds;
        });
        if (regular) t.count("regular");
        t.expect(regular == g.has_value(), "biconditional",
                 json{{"f", io::to_json(f)}, {"regular", regular}, {"g", g ? io::to_json(*g) : json(nullptr)}}, [&] {
                     auto lg = detail::find_g(corpus, f, cap, [](const GeneralizedPoint& gp) {
                         return is_schreier_point_literal(canonical_point(gp).point).holds;
                     });
                     return is_regular_schreier_epi_literal(f).holds != lg.has_value();
                 });
    });
    return detail::finish("cor-4-7", corpus, std::move(tallies), start,
                          json{{"witness_cap", opt.witness_cap ? json(*opt.witness_cap) : json("order of A")}});
}

/// Every Schreier GP is strong.
inline Report suite_remark_4_4(const Corpus& corpus, const SuiteOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    auto tallies = detail::fan_out(corpus.generalized_points(), opt.jobs, [&](const GeneralizedPoint& gp, detail::Tally& t) {
        if (!is_schreier_gp(gp).holds) return;
        t.count("schreier_gps");
        auto strong = is_strong_gp(gp);
        t.expect(strong.holds, "schreier-implies-strong",
                 json{{"gp", io::to_json(gp)}, {"witness", io::witness_json(strong.witness)}},
                 [&] { return is_schreier_gp_literal(gp).holds && !is_strong_gp_literal(gp).holds; });
    });
    return detail::finish("remark-4-4", corpus, std::move(tallies), start);
}

struct SuiteInfo {
    std::string_view name;
    std::size_t default_max_order;
    std::string_view statement;
};

/// Suite names in run order. "all" runs every entry.
inline const std::vector<SuiteInfo>& manifest() {
    static const std::vector<SuiteInfo> suites{
        {"thm-2-4", 3, "pullback along a surjection reflects strongness"},
        {"prop-2-5", 3, "a strong section factoring through g makes (f, g) strong"},
        {"cor-2-6", 3, "a strong canonical point makes (f, g) strong"},
        {"conditions-point", 3, "closure conditions for a class of points"},
        {"conditions-gp", 3, "closure conditions for a class of generalized points"},
        {"thm-3-4", 4, "GF(T) = T and FG(S) = S for the Schreier classes"},
        {"thm-4-5", 4, "a GP is Schreier iff its canonical point is"},
        {"thm-4-6", 4, "regular Schreier epimorphisms are the f admitting a Schreier GP (f, g)"},
        {"cor-4-7", 4, "regular Schreier iff some canonical point is Schreier"},
        {"remark-4-4", 4, "Schreier GPs are strong"},
    };
    return suites;
}

inline json manifest_json() {
    json j = json::array();
    for (const auto& s : manifest())
        j.push_back(json{{"name", s.name}, {"default_max_order", s.default_max_order}, {"statement", s.statement}});
    return j;
}

inline bool is_suite(std::string_view name) {
    if (name == "all") return true;
    for (const auto& s : manifest())
        if (s.name == name) return true;
    return false;
}

inline Report run_on(std::string_view name, const Corpus& corpus, const SuiteOptions& opt) {
    auto cls = [&](ClassKind kind, const char* fallback) {
        return classes::by_name(opt.class_name.value_or(fallback), kind);
    };
    if (name == "thm-2-4") return suite_thm_2_4(corpus, opt);
    if (name == "prop-2-5") return suite_prop_2_5(corpus, opt);
    if (name == "cor-2-6") return suite_cor_2_6(corpus, opt);
    if (name == "conditions-point") return suite_conditions_point(cls(ClassKind::point, "schreier-point"), corpus, opt);
    if (name == "conditions-gp") return suite_conditions_gp(cls(ClassKind::gp, "schreier-gp"), corpus, opt);
    if (name == "thm-3-4") return suite_thm_3_4(corpus, opt);
    if (name == "thm-4-5") return suite_thm_4_5(corpus, opt);
    if (name == "thm-4-6") return suite_thm_4_6(corpus, opt);
    if (name == "cor-4-7") return suite_cor_4_7(corpus, opt);
    if (name == "remark-4-4") return suite_remark_4_4(corpus, opt);
    throw ParseError("unknown suite: " + std::string(name));
}

/// Builds the corpus each suite needs (its default order unless overridden)
/// and runs it. Corpora are shared between suites of "all".
inline Report run_suite(std::string_view name, const SuiteOptions& opt) {
    if (!is_suite(name)) throw ParseError("unknown suite: " + std::string(name));
    std::map<std::size_t, std::unique_ptr<Corpus>> corpora;
    auto corpus_for = [&](const SuiteInfo& s) -> const Corpus& {
        auto params = opt.corpus;
        params.max_order = opt.max_order.value_or(s.default_max_order);
        auto& slot = corpora[params.max_order];
        if (!slot) slot = std::make_unique<Corpus>(params, opt.jobs);
        return *slot;
    };
    if (name != "all") {
        for (const auto& s : manifest())
            if (s.name == name) return run_on(name, corpus_for(s), opt);
    }
    const auto start = std::chrono::steady_clock::now();
    Report all;
    all.suite = "all";
    all.params = json{{"max_order", opt.max_order ? json(*opt.max_order) : json("suite default")},
                      {"exhaustive_up_to", opt.corpus.exhaustive_up_to},
                      {"sample_size", opt.corpus.sample_size},
                      {"seed", opt.corpus.seed}};
    for (const auto& s : manifest()) {
        auto r = run_on(s.name, corpus_for(s), opt);
        all.checked += r.checked;
        for (const auto& v : r.violations) {
            auto tagged = v;
            tagged["suite"] = r.suite;
            all.violations.push_back(std::move(tagged));
        }
        all.stats[std::string(s.name)] = r.checked;
        for (const auto& [k, n] : r.checks) all.checks[r.suite + "/" + k] = n;
        all.parts.push_back(std::move(r));
    }
    all.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return all;
}

// ---------------------------------------------------------------------------
// Search

struct SearchSummary {
    std::string expr;
    std::string domain;  // "surjection" or "gp"
    std::size_t checked = 0;
    std::size_t hits = 0;
    std::size_t unconfirmed = 0;  // optimized yes, literal no: not emitted

    json to_json(const CorpusParams& params) const {
        return json{{"summary",
                     {{"expr", expr},
                      {"domain", domain},
                      {"checked", checked},
                      {"hits", hits},
                      {"unconfirmed", unconfirmed},
                      {"params",
                       {{"max_order", params.max_order},
                        {"exhaustive_up_to", params.exhaustive_up_to},
                        {"sample_size", params.sample_size},
                        {"seed", params.seed}}}}}};
    }
};

/// Surjections when the expression only names epimorphism checkers,
/// generalized points otherwise.
inline std::string search_domain(const Expr& e) {
    for (const auto& n : e.names())
        if (n != "schreier-epi" && n != "regular-schreier") return "gp";
    return "surjection";
}

namespace detail {

inline bool gp_atom(const GeneralizedPoint& gp, std::string_view name, bool literal) {
    if (name == "split") return gp.is_split();
    if (name == "schreier-point") {
        if (!gp.is_split()) return false;
        auto p = Point::assume_valid(gp.f(), gp.g());
        return (literal ? is_schreier_point_literal(p) : is_schreier_point(p)).holds;
    }
    if (name == "strong-gp") return (literal ? is_strong_gp_literal(gp) : is_strong_gp(gp)).holds;
    if (name == "schreier-gp") return (literal ? is_schreier_gp_literal(gp) : is_schreier_gp(gp)).holds;
    if (name == "schreier-epi") return (literal ? is_schreier_epi_literal(gp.f()) : is_schreier_epi(gp.f())).holds;
    if (name == "regular-schreier")
        return (literal ? is_regular_schreier_epi_literal(gp.f()) : is_regular_schreier_epi(gp.f())).holds;
    throw ParseError("unknown checker: " + std::string(name));
}

inline bool epi_atom(const Hom& f, std::string_view name, bool literal) {
    if (name == "schreier-epi") return (literal ? is_schreier_epi_literal(f) : is_schreier_epi(f)).holds;
    if (name == "regular-schreier")
        return (literal ? is_regular_schreier_epi_literal(f) : is_regular_schreier_epi(f)).holds;
    throw ParseError("checker " + std::string(name) + " does not apply to a bare surjection");
}

/// Evaluates with memoized atoms.
template <class Atom>
bool eval_memo(const Expr& e, Atom&& atom) {
    std::map<std::string, bool, std::less<>> memo;
    return e.evaluate([&](const std::string& name) {
        auto it = memo.find(name);
        if (it == memo.end()) it = memo.emplace(name, atom(name)).first;
        return it->second;
    });
}

}  // namespace detail

/// Whether `instance` (a hit line's "instance") satisfies `e` under the
/// definition-literal checkers alone.
inline bool revalidate_hit(const Expr& e, const std::string& kind, const json& instance) {
    if (kind == "surjection") {
        auto f = io::hom_from_json(instance);
        return detail::eval_memo(e, [&](const std::string& n) { return detail::epi_atom(f, n, true); });
    }
    auto gp = io::gp_from_json(instance);
    return detail::eval_memo(e, [&](const std::string& n) { return detail::gp_atom(gp, n, true); });
}

/// Runs `e` over the corpus, smallest total order first, and passes each
/// confirmed hit line to `emit` in that order.
template <class Emit>
SearchSummary search(const Expr& e, const Corpus& corpus, std::size_t jobs, Emit&& emit) {
    SearchSummary sum;
    sum.expr = e.to_string();
    sum.domain = search_domain(e);
    enum class Verdict { miss, hit, unconfirmed };
    auto judge = [&](auto&& atom) {
        if (!detail::eval_memo(e, [&](const std::string& n) { return atom(n, false); })) return Verdict::miss;
        return detail::eval_memo(e, [&](const std::string& n) { return atom(n, true); }) ? Verdict::hit
                                                                                         : Verdict::unconfirmed;
    };
    auto report = [&](const std::vector<Verdict>& verdicts, auto&& line) {
        sum.checked = verdicts.size();
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            if (verdicts[i] == Verdict::unconfirmed) ++sum.unconfirmed;
            if (verdicts[i] != Verdict::hit) continue;
            ++sum.hits;
            emit(line(i));
        }
    };
    if (sum.domain == "surjection") {
        const auto items = corpus.surjections();
        auto verdicts = parallel_map<Verdict>(items.size(), jobs, [&](std::size_t i) {
            return judge([&](const std::string& n, bool lit) { return detail::epi_atom(items[i], n, lit); });
        });
        report(verdicts, [&](std::size_t i) {
            const auto& f = items[i];
            return json{{"kind", "surjection"},
                        {"total_order", f.dom()->order() + f.cod()->order()},
                        {"instance", io::to_json(f)}};
        });
    } else {
        const auto items = corpus.generalized_points();
        auto verdicts = parallel_map<Verdict>(items.size(), jobs, [&](std::size_t i) {
            return judge([&](const std::string& n, bool lit) { return detail::gp_atom(items[i], n, lit); });
        });
        report(verdicts, [&](std::size_t i) {
            const auto& gp = items[i];
            return json{{"kind", "gp"},
                        {"total_order", gp.f().dom()->order() + gp.f().cod()->order() + gp.g().dom()->order()},
                        {"instance", io::to_json(gp)}};
        });
    }
    return sum;
}

}  // namespace mwb::verify
