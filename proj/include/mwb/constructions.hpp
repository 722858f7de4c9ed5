#pragma once

// Constructions on points and generalized points. Pullbacks and limits are
// computed component-wise; class predicates are extensional tests.

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "mwb/catalog.hpp"
#include "mwb/coverage.hpp"
#include "mwb/monoid.hpp"
#include "mwb/points.hpp"

namespace mwb {

/// Pullback of (f, g) along x: X -> B.
///
///     C x_B X --g x 1--> A x_B X --pi2--> X
///        |                  |             |
///        v                  v             v x
///        C -------g-------> A ----f-----> B
///
/// Both squares are pullbacks; `source` is the pullback of f g along x, so
/// pi2 (g x 1) is its second projection.
struct PulledBackGP {
    GeneralizedPoint original;
    Hom along;
    PairLimit total;   // A x_B X
    PairLimit source;  // C x_B X
    Hom g_times_1;
    GeneralizedPoint result;
};

inline PulledBackGP pullback_gp(const GeneralizedPoint& gp, const Hom& x) {
    coverage::note(coverage::Op::pullback_gp);
    if (!same_object(x.cod(), gp.f().cod())) throw DomainMismatch("pullback_gp: x does not land in the base");
    auto total = pullback(Cospan(gp.f(), x));
    auto source = pullback(Cospan(gp.composite(), x));
    auto gx1 = pair_map(gp.g(), Hom::identity(x.dom()), source, total);
    auto result = GeneralizedPoint::assume_valid(total.second, *gx1);
    return PulledBackGP{gp, x, std::move(total), std::move(source), *gx1, std::move(result)};
}

/// Pullback of a point along x, with section t -> (s(x(t)), t).
inline Point pullback_point(const Point& p, const Hom& x) {
    if (!same_object(x.cod(), p.base())) throw DomainMismatch("pullback_point: x does not land in the base");
    auto total = pullback(Cospan(p.f(), x));
    auto section = mediating(total, compose(p.s(), x), Hom::identity(x.dom()));
    return Point::assume_valid(total.second, *section);
}

/// The point (pi2: A x_B C -> C, <g, 1_C>), with the pullback of f along
/// f g it lives on.
struct CanonicalPoint {
    PairLimit pullback;
    Point point;
};

inline CanonicalPoint canonical_point(const GeneralizedPoint& gp) {
    coverage::note(coverage::Op::canonical_point);
    auto fg = gp.composite();
    auto pb = pullback(Cospan(gp.f(), fg));
    auto section = mediating(pb, gp.g(), Hom::identity(gp.g().dom()));
    auto point = Point::assume_valid(pb.second, *section);
    return CanonicalPoint{std::move(pb), std::move(point)};
}

enum class ClassKind { point, gp };

/// Decidable class of points or of generalized points.
class ClassPredicate {
public:
    using PointTest = std::function<bool(const Point&)>;
    using GPTest = std::function<bool(const GeneralizedPoint&)>;

    static ClassPredicate of_points(std::string name, PointTest test) {
        ClassPredicate c(ClassKind::point, std::move(name));
        c.point_test_ = std::move(test);
        return c;
    }

    static ClassPredicate of_gps(std::string name, GPTest test) {
        ClassPredicate c(ClassKind::gp, std::move(name));
        c.gp_test_ = std::move(test);
        return c;
    }

    ClassKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }

    bool contains(const Point& p) const {
        if (kind_ != ClassKind::point) throw KindMismatch("class " + name_ + " is a class of generalized points");
        return point_test_(p);
    }

    bool contains(const GeneralizedPoint& gp) const {
        if (kind_ != ClassKind::gp) throw KindMismatch("class " + name_ + " is a class of points");
        return gp_test_(gp);
    }

private:
    ClassPredicate(ClassKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    ClassKind kind_;
    std::string name_;
    PointTest point_test_;
    GPTest gp_test_;
};

namespace classes {

inline ClassPredicate schreier_points() {
    return ClassPredicate::of_points("schreier-point", [](const Point& p) { return is_schreier_point(p).holds; });
}
inline ClassPredicate schreier_gps() {
    return ClassPredicate::of_gps("schreier-gp", [](const GeneralizedPoint& gp) { return is_schreier_gp(gp).holds; });
}
inline ClassPredicate strong_gps() {
    return ClassPredicate::of_gps("strong-gp", [](const GeneralizedPoint& gp) { return is_strong_gp(gp).holds; });
}
inline ClassPredicate all(ClassKind kind) {
    if (kind == ClassKind::point) return ClassPredicate::of_points("all", [](const Point&) { return true; });
    return ClassPredicate::of_gps("all", [](const GeneralizedPoint&) { return true; });
}
inline ClassPredicate none(ClassKind kind) {
    if (kind == ClassKind::point) return ClassPredicate::of_points("none", [](const Point&) { return false; });
    return ClassPredicate::of_gps("none", [](const GeneralizedPoint&) { return false; });
}

/// Resolves a CLI class name. "all" and "none" take the requested kind;
/// the named classes have a fixed kind and reject a conflicting request.
inline ClassPredicate by_name(const std::string& name, std::optional<ClassKind> kind = std::nullopt) {
    auto check = [&](ClassPredicate c) {
        if (kind && c.kind() != *kind) throw KindMismatch("class " + name + " has the wrong kind here");
        return c;
    };
    if (name == "schreier-point") return check(schreier_points());
    if (name == "schreier-gp") return check(schreier_gps());
    if (name == "strong-gp") return check(strong_gps());
    if (name == "all") return all(kind.value_or(ClassKind::gp));
    if (name == "none") return none(kind.value_or(ClassKind::gp));
    throw ParseError("unknown class name: " + name);
}

}  // namespace classes

/// F(T): the points whose split generalized point lies in T.
inline ClassPredicate map_F(const ClassPredicate& t) {
    coverage::note(coverage::Op::map_F);
    if (t.kind() != ClassKind::gp) throw KindMismatch("map_F expects a class of generalized points");
    return ClassPredicate::of_points("F(" + t.name() + ")", [t](const Point& p) { return t.contains(as_generalized(p)); });
}

/// G(S): the generalized points whose canonical point lies in S.
inline ClassPredicate map_G(const ClassPredicate& s) {
    coverage::note(coverage::Op::map_G);
    if (s.kind() != ClassKind::point) throw KindMismatch("map_G expects a class of points");
    return ClassPredicate::of_gps("G(" + s.name() + ")",
                                  [s](const GeneralizedPoint& gp) { return s.contains(canonical_point(gp).point); });
}

/// The point a split generalized point amounts to.
inline std::optional<Point> as_point(const GeneralizedPoint& gp) {
    if (!gp.is_split()) return std::nullopt;
    return Point::assume_valid(gp.f(), gp.g());
}

inline GeneralizedPoint terminal_gp() {
    auto z = catalog::trivial();
    return GeneralizedPoint::assume_valid(Hom::identity(z), Hom::identity(z));
}

inline Point terminal_point() {
    auto z = catalog::trivial();
    return Point::assume_valid(Hom::identity(z), Hom::identity(z));
}

/// (f x f', g x g') over B x B'.
inline GeneralizedPoint product_gp(const GeneralizedPoint& p, const GeneralizedPoint& q) {
    coverage::note(coverage::Op::product_gp);
    auto a = product(p.f().dom(), q.f().dom());
    auto b = product(p.f().cod(), q.f().cod());
    auto c = product(p.g().dom(), q.g().dom());
    auto f = pair_map(p.f(), q.f(), a, b);
    auto g = pair_map(p.g(), q.g(), c, a);
    return GeneralizedPoint::assume_valid(std::move(*f), std::move(*g));
}

inline Point product_point(const Point& p, const Point& q) {
    auto gp = product_gp(as_generalized(p), as_generalized(q));
    return Point::assume_valid(gp.f(), gp.g());
}

/// Component-wise equalizer of a parallel pair in GPt. The restricted pair
/// need not have a surjective composite; `gp` is set only when it does.
struct GPEqualizer {
    Embedded total;   // E_A
    Embedded base;    // E_B
    Embedded source;  // E_C
    Hom f;
    Hom g;
    bool is_generalized_point = false;
    std::optional<GeneralizedPoint> gp;
};

inline GPEqualizer equalizer_gp(const GPMorphism& m1, const GPMorphism& m2) {
    coverage::note(coverage::Op::equalizer_gp);
    if (m1.source() != m2.source() || m1.target() != m2.target())
        throw DomainMismatch("equalizer_gp: morphisms are not parallel");
    auto ea = as_monoid(equalizer(m1.alpha(), m2.alpha()));
    auto eb = as_monoid(equalizer(m1.beta(), m2.beta()));
    auto ec = as_monoid(equalizer(m1.gamma(), m2.gamma()));
    // The commuting squares force f(E_A) in E_B and g(E_C) in E_A.
    auto f = restrict_hom(m1.source().f(), ea, eb);
    auto g = restrict_hom(m1.source().g(), ec, ea);
    GPEqualizer out{std::move(ea), std::move(eb), std::move(ec), std::move(*f), std::move(*g), false, std::nullopt};
    if (compose(out.f, out.g).is_surjective()) {
        out.is_generalized_point = true;
        out.gp = GeneralizedPoint::assume_valid(out.f, out.g);
    }
    return out;
}

/// For a regular Schreier epimorphism f, the generalized point (f, g) with
/// g the inclusion of the submonoid of all representatives; nullopt
/// otherwise.
inline std::optional<GeneralizedPoint> witness_g(const Hom& f) {
    coverage::note(coverage::Op::witness_g);
    detail::require_surjective(f, "witness_g");
    if (!is_regular_schreier_epi(f)) return std::nullopt;
    auto reps = as_monoid(Submonoid::assume_valid(f.dom(), representative_mask(f)));
    return GeneralizedPoint::make(f, reps.inclusion);
}

}  // namespace mwb
