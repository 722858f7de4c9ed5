#pragma once

// Points and generalized points with their decision procedures.
//
// Monoids are written additively in the comments below: a decomposition of
// a over a section value t is a kernel element k with a = k + t, the kernel
// element on the left. Each Schreier checker comes in two forms: the
// default one works through translation maps k -> k + t restricted to a
// fiber, the `_literal` one scans the defining condition directly. Both
// return the same decision and the same (lexicographically least) witness.

#include <algorithm>
#include <span>
#include <vector>

#include "mwb/coverage.hpp"
#include "mwb/monoid.hpp"

namespace mwb {

/// Decision with a witness on failure: an element, or a pair such as (a, c).
struct CheckResult {
    bool holds = true;
    std::vector<Elem> witness;

    explicit operator bool() const noexcept { return holds; }
    static CheckResult pass() { return {}; }
    static CheckResult fail(std::vector<Elem> w) { return {false, std::move(w)}; }
    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Split epimorphism f: A -> B with chosen section s, f s = 1_B.
class Point {
public:
    static Point make(Hom f, Hom s) {
        if (!same_object(s.cod(), f.dom()) || !same_object(s.dom(), f.cod()))
            throw InvalidPoint("point: section does not run B -> A");
        for (Elem b = 0; b < f.cod()->order(); ++b)
            if (f(s(b)) != b) throw InvalidPoint("point: f s is not the identity");
        return Point(std::move(f), std::move(s));
    }

    static Point assume_valid(Hom f, Hom s) { return Point(std::move(f), std::move(s)); }

    const Hom& f() const noexcept { return f_; }
    const Hom& s() const noexcept { return s_; }
    const MonoidPtr& total() const noexcept { return f_.dom(); }
    const MonoidPtr& base() const noexcept { return f_.cod(); }

    friend bool operator==(const Point&, const Point&) = default;

private:
    Point(Hom f, Hom s) : f_(std::move(f)), s_(std::move(s)) {}
    Hom f_;
    Hom s_;
};

/// Composable pair f: A -> B, g: C -> A with f g surjective.
class GeneralizedPoint {
public:
    static GeneralizedPoint make(Hom f, Hom g) {
        if (!same_object(g.cod(), f.dom())) throw DomainMismatch("generalized point: g does not land in dom f");
        if (!compose(f, g).is_surjective()) throw NotSurjective("generalized point: f g is not surjective");
        return GeneralizedPoint(std::move(f), std::move(g));
    }

    static GeneralizedPoint assume_valid(Hom f, Hom g) { return GeneralizedPoint(std::move(f), std::move(g)); }

    const Hom& f() const noexcept { return f_; }
    const Hom& g() const noexcept { return g_; }
    Hom composite() const { return compose(f_, g_); }

    bool is_split() const {
        if (!same_object(g_.dom(), f_.cod())) return false;
        for (Elem c = 0; c < g_.dom()->order(); ++c)
            if (f_(g_(c)) != c) return false;
        return true;
    }

    friend bool operator==(const GeneralizedPoint&, const GeneralizedPoint&) = default;

private:
    GeneralizedPoint(Hom f, Hom g) : f_(std::move(f)), g_(std::move(g)) {}
    Hom f_;
    Hom g_;
};

/// (alpha, beta, gamma) with alpha g = g' gamma and beta f = f' alpha.
class GPMorphism {
public:
    static GPMorphism make(GeneralizedPoint source, GeneralizedPoint target, Hom alpha, Hom beta, Hom gamma) {
        const auto& s = source;
        const auto& t = target;
        if (!same_object(alpha.dom(), s.f().dom()) || !same_object(alpha.cod(), t.f().dom()) ||
            !same_object(beta.dom(), s.f().cod()) || !same_object(beta.cod(), t.f().cod()) ||
            !same_object(gamma.dom(), s.g().dom()) || !same_object(gamma.cod(), t.g().dom()))
            throw DomainMismatch("gp morphism: components do not match the carriers");
        if (compose(alpha, s.g()) != compose(t.g(), gamma)) throw InvalidHom("gp morphism: left square does not commute");
        if (compose(beta, s.f()) != compose(t.f(), alpha)) throw InvalidHom("gp morphism: right square does not commute");
        return GPMorphism(std::move(source), std::move(target), std::move(alpha), std::move(beta), std::move(gamma));
    }

    const GeneralizedPoint& source() const noexcept { return source_; }
    const GeneralizedPoint& target() const noexcept { return target_; }
    const Hom& alpha() const noexcept { return alpha_; }
    const Hom& beta() const noexcept { return beta_; }
    const Hom& gamma() const noexcept { return gamma_; }

private:
    GPMorphism(GeneralizedPoint s, GeneralizedPoint t, Hom a, Hom b, Hom c)
        : source_(std::move(s)), target_(std::move(t)), alpha_(std::move(a)), beta_(std::move(b)), gamma_(std::move(c)) {}
    GeneralizedPoint source_;
    GeneralizedPoint target_;
    Hom alpha_;
    Hom beta_;
    Hom gamma_;
};

inline GeneralizedPoint as_generalized(const Point& p) {
    coverage::note(coverage::Op::as_generalized);
    return GeneralizedPoint::assume_valid(p.f(), p.s());
}

/// True iff the parts together generate all of M: in monoids the only
/// subobject through which every part factors is then M itself.
inline bool jointly_strongly_epic(const MonoidPtr& m, std::span<const Submonoid> parts) {
    coverage::note(coverage::Op::jointly_strongly_epic);
    std::vector<Elem> seed;
    for (const auto& p : parts) {
        if (!same_object(p.ambient(), m)) throw DomainMismatch("jointly_strongly_epic: part lives in another monoid");
        seed.insert(seed.end(), p.members().begin(), p.members().end());
    }
    return generated_submonoid(m, seed).is_whole();
}

inline bool jointly_strongly_epic(const MonoidPtr& m, std::initializer_list<Submonoid> parts) {
    return jointly_strongly_epic(m, std::span<const Submonoid>(parts.begin(), parts.size()));
}

/// Witness: least element of A outside the submonoid generated by Ker f and
/// the image of g.
inline CheckResult is_strong_gp(const GeneralizedPoint& gp) {
    coverage::note(coverage::Op::is_strong_gp);
    const auto& a = gp.f().dom();
    Submonoid parts[] = {kernel(gp.f()), image(gp.g())};
    if (jointly_strongly_epic(a, parts)) return CheckResult::pass();
    std::vector<Elem> seed;
    for (const auto& p : parts) seed.insert(seed.end(), p.members().begin(), p.members().end());
    auto gen = generated_submonoid(a, seed);
    for (Elem x = 0; x < a->order(); ++x)
        if (!gen.contains(x)) return CheckResult::fail({x});
    return CheckResult::pass();
}

/// Subobject form of strongness: intersects every closed subset of A that
/// contains the identity, Ker f and the image of g, and fails when the
/// intersection is proper. Exponential in |A|; for |A| <= 20.
inline CheckResult is_strong_gp_literal(const GeneralizedPoint& gp) {
    const Monoid& a = *gp.f().dom();
    const std::size_t n = a.order();
    if (n > 20) throw Error("is_strong_gp_literal: order too large");
    std::uint32_t required = 1u << a.identity();
    for (Elem x = 0; x < n; ++x)
        if (gp.f()(x) == gp.f().cod()->identity()) required |= 1u << x;
    for (Elem c = 0; c < gp.g().dom()->order(); ++c) required |= 1u << gp.g()(c);
    const std::uint32_t whole = (1u << n) - 1;
    std::uint32_t meet = whole;
    for (std::uint32_t s = 0; s <= whole; ++s) {
        if ((s & required) != required) continue;
        bool closed = true;
        for (Elem x = 0; x < n && closed; ++x) {
            if (!(s >> x & 1)) continue;
            for (Elem y = 0; y < n && closed; ++y)
                if (s >> y & 1) closed = s >> a.op(x, y) & 1;
        }
        if (closed) meet &= s;
    }
    for (Elem x = 0; x < n; ++x)
        if (!(meet >> x & 1)) return CheckResult::fail({x});
    return CheckResult::pass();
}

namespace detail {

// Number of kernel elements k with k + t = a, for every a in A.
inline void count_translations(const Monoid& a, std::span<const Elem> ker, Elem t, std::vector<std::uint32_t>& cnt) {
    for (Elem k : ker) ++cnt[a.op(k, t)];
}

// k -> k + t is a bijection Ker f -> fiber(f(t)).
inline bool translation_bijective(const Hom& f, std::span<const Elem> ker, Elem t, std::size_t fiber_size,
                                  std::vector<bool>& scratch) {
    if (ker.size() != fiber_size) return false;
    const Monoid& a = *f.dom();
    std::fill(scratch.begin(), scratch.end(), false);
    for (Elem k : ker) {
        Elem x = a.op(k, t);
        if (scratch[x]) return false;
        scratch[x] = true;
    }
    return true;
}

inline std::vector<std::size_t> fiber_sizes(const Hom& f) {
    std::vector<std::size_t> sizes(f.cod()->order(), 0);
    for (Elem a : f.map()) ++sizes[a];
    return sizes;
}

inline void require_surjective(const Hom& f, const char* who) {
    if (!f.is_surjective()) throw NotSurjective(std::string(who) + ": f is not surjective");
}

}  // namespace detail

/// Every a in A is k + s(f(a)) for exactly one k in Ker f. Witness: the
/// least a with zero or several decompositions.
inline CheckResult is_schreier_point(const Point& p) {
    coverage::note(coverage::Op::is_schreier_point);
    const Monoid& a = *p.total();
    auto ker = kernel(p.f());
    std::vector<std::uint32_t> cnt(a.order(), 0);
    for (Elem b = 0; b < p.base()->order(); ++b) detail::count_translations(a, ker.members(), p.s()(b), cnt);
    for (Elem x = 0; x < a.order(); ++x)
        if (cnt[x] != 1) return CheckResult::fail({x});
    return CheckResult::pass();
}

inline CheckResult is_schreier_point_literal(const Point& p) {
    const Monoid& a = *p.total();
    auto ker = kernel(p.f());
    for (Elem x = 0; x < a.order(); ++x) {
        Elem t = p.s()(p.f()(x));
        std::size_t n = 0;
        for (Elem k : ker.members()) n += a.op(k, t) == x ? 1 : 0;
        if (n != 1) return CheckResult::fail({x});
    }
    return CheckResult::pass();
}

/// Elements a over b such that every a' over b is k + a for exactly one k
/// in Ker f. Sorted ascending.
inline std::vector<Elem> representatives(const Hom& f, Elem b) {
    coverage::note(coverage::Op::representatives);
    detail::require_surjective(f, "representatives");
    if (b >= f.cod()->order()) throw Error("representatives: element out of range");
    auto ker = kernel(f);
    auto sizes = detail::fiber_sizes(f);
    std::vector<bool> scratch(f.dom()->order());
    std::vector<Elem> out;
    for (Elem a = 0; a < f.dom()->order(); ++a)
        if (f(a) == b && detail::translation_bijective(f, ker.members(), a, sizes[b], scratch)) out.push_back(a);
    return out;
}

inline std::vector<Elem> representatives_literal(const Hom& f, Elem b) {
    detail::require_surjective(f, "representatives");
    if (b >= f.cod()->order()) throw Error("representatives: element out of range");
    const Monoid& m = *f.dom();
    auto ker = kernel(f);
    std::vector<Elem> out;
    for (Elem a = 0; a < m.order(); ++a) {
        if (f(a) != b) continue;
        bool ok = true;
        for (Elem a2 = 0; a2 < m.order() && ok; ++a2) {
            if (f(a2) != b) continue;
            std::size_t n = 0;
            for (Elem k : ker.members()) n += m.op(k, a) == a2 ? 1 : 0;
            ok = n == 1;
        }
        if (ok) out.push_back(a);
    }
    return out;
}

namespace detail {

template <class Reps>
CheckResult schreier_epi_with(const Hom& f, Reps reps) {
    for (Elem b = 0; b < f.cod()->order(); ++b)
        if (reps(f, b).empty()) return CheckResult::fail({b});
    return CheckResult::pass();
}

// Witness: [b] when b has no representative, else the least pair [r1, r2]
// of representatives whose sum is not one.
template <class Reps>
CheckResult regular_schreier_epi_with(const Hom& f, Reps reps) {
    std::vector<bool> is_rep(f.dom()->order(), false);
    for (Elem b = 0; b < f.cod()->order(); ++b) {
        auto r = reps(f, b);
        if (r.empty()) return CheckResult::fail({b});
        for (Elem a : r) is_rep[a] = true;
    }
    const Monoid& m = *f.dom();
    if (!is_rep[m.identity()]) return CheckResult::fail({m.identity()});
    for (Elem x = 0; x < m.order(); ++x) {
        if (!is_rep[x]) continue;
        for (Elem y = 0; y < m.order(); ++y)
            if (is_rep[y] && !is_rep[m.op(x, y)]) return CheckResult::fail({x, y});
    }
    return CheckResult::pass();
}

}  // namespace detail

/// Witness: an element of B without a representative.
inline CheckResult is_schreier_epi(const Hom& f) {
    coverage::note(coverage::Op::is_schreier_epi);
    detail::require_surjective(f, "is_schreier_epi");
    return detail::schreier_epi_with(f, [](const Hom& h, Elem b) { return representatives(h, b); });
}

inline CheckResult is_schreier_epi_literal(const Hom& f) {
    detail::require_surjective(f, "is_schreier_epi");
    return detail::schreier_epi_with(f, [](const Hom& h, Elem b) { return representatives_literal(h, b); });
}

inline CheckResult is_regular_schreier_epi(const Hom& f) {
    coverage::note(coverage::Op::is_regular_schreier_epi);
    detail::require_surjective(f, "is_regular_schreier_epi");
    return detail::regular_schreier_epi_with(f, [](const Hom& h, Elem b) { return representatives(h, b); });
}

inline CheckResult is_regular_schreier_epi_literal(const Hom& f) {
    detail::require_surjective(f, "is_regular_schreier_epi");
    return detail::regular_schreier_epi_with(f, [](const Hom& h, Elem b) { return representatives_literal(h, b); });
}

/// All representatives of all elements of B, as a mask over A.
inline std::vector<bool> representative_mask(const Hom& f) {
    std::vector<bool> mask(f.dom()->order(), false);
    for (Elem b = 0; b < f.cod()->order(); ++b)
        for (Elem a : representatives(f, b)) mask[a] = true;
    return mask;
}

/// For every a and c with f(a) = f(g(c)) there is exactly one k in Ker f
/// with a = k + g(c). Witness: the least such pair [a, c] that fails.
inline CheckResult is_schreier_gp(const GeneralizedPoint& gp) {
    coverage::note(coverage::Op::is_schreier_gp);
    const Hom& f = gp.f();
    const Hom& g = gp.g();
    const Monoid& a = *f.dom();
    const std::size_t nc = g.dom()->order();
    auto ker = kernel(f);
    // Each distinct value t = g(c) is checked once; bad[t] lists the a over
    // f(t) with the wrong number of decompositions.
    std::vector<std::vector<Elem>> bad(a.order());
    std::vector<bool> done(a.order(), false);
    std::vector<std::uint32_t> cnt(a.order());
    bool any = false;
    for (Elem c = 0; c < nc; ++c) {
        Elem t = g(c);
        if (done[t]) continue;
        done[t] = true;
        std::fill(cnt.begin(), cnt.end(), 0);
        detail::count_translations(a, ker.members(), t, cnt);
        for (Elem x = 0; x < a.order(); ++x)
            if (f(x) == f(t) && cnt[x] != 1) bad[t].push_back(x), any = true;
    }
    if (!any) return CheckResult::pass();
    for (Elem x = 0; x < a.order(); ++x)
        for (Elem c = 0; c < nc; ++c) {
            const auto& bt = bad[g(c)];
            if (std::binary_search(bt.begin(), bt.end(), x)) return CheckResult::fail({x, c});
        }
    return CheckResult::pass();
}

inline CheckResult is_schreier_gp_literal(const GeneralizedPoint& gp) {
    const Hom& f = gp.f();
    const Hom& g = gp.g();
    const Monoid& a = *f.dom();
    auto ker = kernel(f);
    for (Elem x = 0; x < a.order(); ++x)
        for (Elem c = 0; c < g.dom()->order(); ++c) {
            if (f(x) != f(g(c))) continue;
            std::size_t n = 0;
            for (Elem k : ker.members()) n += a.op(k, g(c)) == x ? 1 : 0;
            if (n != 1) return CheckResult::fail({x, c});
        }
    return CheckResult::pass();
}

}  // namespace mwb
