#pragma once

// Finite monoids as Cayley tables, with the homomorphisms and binary limits
// the rest of the workbench is built from. Elements are indices
// 0..order-1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mwb/errors.hpp"

namespace mwb {

class Monoid {
public:
    /// Checks the table and returns the monoid, or throws InvalidMonoid
    /// carrying the first violation found (range, identity law, then the
    /// lexicographically first non-associative triple).
    static Monoid from_rows(const std::vector<std::vector<Elem>>& rows, Elem identity) {
        const std::size_t n = rows.size();
        if (n == 0) throw InvalidMonoid("empty table", {});
        std::vector<Elem> flat;
        flat.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) {
                std::ostringstream os;
                os << "row " << i << " has " << rows[i].size() << " entries, expected " << n;
                throw InvalidMonoid(os.str(), {static_cast<Elem>(i)});
            }
            flat.insert(flat.end(), rows[i].begin(), rows[i].end());
        }
        return from_flat(n, std::move(flat), identity);
    }

    static Monoid from_flat(std::size_t order, std::vector<Elem> flat, Elem identity) {
        if (order == 0) throw InvalidMonoid("empty table", {});
        if (flat.size() != order * order) throw InvalidMonoid("table is not square", {});
        if (identity >= order) {
            std::ostringstream os;
            os << "identity " << identity << " out of range";
            throw InvalidMonoid(os.str(), {identity});
        }
        for (std::size_t i = 0; i < order; ++i)
            for (std::size_t j = 0; j < order; ++j)
                if (flat[i * order + j] >= order) {
                    std::ostringstream os;
                    os << "table[" << i << "][" << j << "]=" << flat[i * order + j] << " out of range";
                    throw InvalidMonoid(os.str(), {static_cast<Elem>(i), static_cast<Elem>(j)});
                }
        Monoid m(order, std::move(flat), identity);
        for (Elem i = 0; i < order; ++i) {
            if (m.op(identity, i) != i) {
                std::ostringstream os;
                os << "identity law fails: table[" << identity << "][" << i << "]=" << m.op(identity, i)
                   << " != " << i;
                throw InvalidMonoid(os.str(), {i});
            }
            if (m.op(i, identity) != i) {
                std::ostringstream os;
                os << "identity law fails: table[" << i << "][" << identity << "]=" << m.op(i, identity)
                   << " != " << i;
                throw InvalidMonoid(os.str(), {i});
            }
        }
        for (Elem i = 0; i < order; ++i)
            for (Elem j = 0; j < order; ++j)
                for (Elem k = 0; k < order; ++k)
                    if (m.op(m.op(i, j), k) != m.op(i, m.op(j, k))) {
                        std::ostringstream os;
                        os << "not associative at (" << i << "," << j << "," << k << ")";
                        throw InvalidMonoid(os.str(), {i, j, k});
                    }
        return m;
    }

    /// For tables that are valid by construction (products, pullbacks,
    /// enumeration output). No checks.
    static Monoid assume_valid(std::size_t order, std::vector<Elem> flat, Elem identity) {
        return Monoid(order, std::move(flat), identity);
    }

    std::size_t order() const noexcept { return order_; }
    Elem identity() const noexcept { return identity_; }
    Elem op(Elem a, Elem b) const noexcept { return table_[a * order_ + b]; }
    std::span<const Elem> flat() const noexcept { return table_; }

    std::vector<std::vector<Elem>> rows() const {
        std::vector<std::vector<Elem>> out(order_);
        for (std::size_t i = 0; i < order_; ++i)
            out[i].assign(table_.begin() + i * order_, table_.begin() + (i + 1) * order_);
        return out;
    }

    /// Relabels so the identity sits at index 0 (swaps it with element 0).
    Monoid normalized() const {
        if (identity_ == 0) return *this;
        auto swap = [this](Elem x) -> Elem { return x == 0 ? identity_ : (x == identity_ ? 0 : x); };
        std::vector<Elem> flat(order_ * order_);
        for (Elem i = 0; i < order_; ++i)
            for (Elem j = 0; j < order_; ++j) flat[swap(i) * order_ + swap(j)] = swap(op(i, j));
        return Monoid(order_, std::move(flat), 0);
    }

    bool is_idempotent(Elem a) const noexcept { return op(a, a) == a; }

    friend bool operator==(const Monoid&, const Monoid&) = default;

private:
    Monoid(std::size_t order, std::vector<Elem> flat, Elem identity)
        : order_(order), table_(std::move(flat)), identity_(identity) {}

    std::size_t order_;
    std::vector<Elem> table_;
    Elem identity_;
};

inline Monoid validate_monoid(const std::vector<std::vector<Elem>>& rows, Elem identity) {
    return Monoid::from_rows(rows, identity);
}

/// Monoids are shared immutably between the homs that reference them.
using MonoidPtr = std::shared_ptr<const Monoid>;

inline MonoidPtr share(Monoid m) { return std::make_shared<const Monoid>(std::move(m)); }

inline bool same_object(const MonoidPtr& a, const MonoidPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

class Hom {
public:
    static Hom make(MonoidPtr dom, MonoidPtr cod, std::vector<Elem> map) {
        if (map.size() != dom->order()) throw InvalidHom("map length does not match domain order");
        for (Elem a = 0; a < map.size(); ++a)
            if (map[a] >= cod->order()) {
                std::ostringstream os;
                os << "map[" << a << "]=" << map[a] << " out of range";
                throw InvalidHom(os.str(), {a});
            }
        if (map[dom->identity()] != cod->identity())
            throw InvalidHom("identity not preserved", {dom->identity()});
        for (Elem i = 0; i < dom->order(); ++i)
            for (Elem j = 0; j < dom->order(); ++j)
                if (map[dom->op(i, j)] != cod->op(map[i], map[j])) {
                    std::ostringstream os;
                    os << "not multiplicative at (" << i << "," << j << ")";
                    throw InvalidHom(os.str(), {i, j});
                }
        return Hom(std::move(dom), std::move(cod), std::move(map));
    }

    static Hom assume_valid(MonoidPtr dom, MonoidPtr cod, std::vector<Elem> map) {
        return Hom(std::move(dom), std::move(cod), std::move(map));
    }

    static Hom identity(const MonoidPtr& m) {
        std::vector<Elem> map(m->order());
        for (Elem a = 0; a < map.size(); ++a) map[a] = a;
        return Hom(m, m, std::move(map));
    }

    /// The unique hom into the trivial monoid, or the zero hom dom -> cod.
    static Hom zero(const MonoidPtr& dom, const MonoidPtr& cod) {
        return Hom(dom, cod, std::vector<Elem>(dom->order(), cod->identity()));
    }

    const MonoidPtr& dom() const noexcept { return dom_; }
    const MonoidPtr& cod() const noexcept { return cod_; }
    Elem operator()(Elem a) const noexcept { return map_[a]; }
    std::span<const Elem> map() const noexcept { return map_; }

    bool is_surjective() const {
        std::vector<bool> hit(cod_->order(), false);
        std::size_t count = 0;
        for (Elem b : map_)
            if (!hit[b]) hit[b] = true, ++count;
        return count == cod_->order();
    }

    bool is_injective() const {
        std::vector<bool> hit(cod_->order(), false);
        for (Elem b : map_) {
            if (hit[b]) return false;
            hit[b] = true;
        }
        return true;
    }

    bool is_identity() const {
        if (!same_object(dom_, cod_)) return false;
        for (Elem a = 0; a < map_.size(); ++a)
            if (map_[a] != a) return false;
        return true;
    }

    friend bool operator==(const Hom& x, const Hom& y) {
        return x.map_ == y.map_ && same_object(x.dom_, y.dom_) && same_object(x.cod_, y.cod_);
    }

private:
    Hom(MonoidPtr dom, MonoidPtr cod, std::vector<Elem> map)
        : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {}

    MonoidPtr dom_;
    MonoidPtr cod_;
    std::vector<Elem> map_;
};

/// f after g. Throws DomainMismatch unless g.cod == f.dom.
inline Hom compose(const Hom& f, const Hom& g) {
    if (!same_object(g.cod(), f.dom())) throw DomainMismatch("compose: codomain of g is not the domain of f");
    std::vector<Elem> map(g.dom()->order());
    for (Elem c = 0; c < map.size(); ++c) map[c] = f(g(c));
    return Hom::assume_valid(g.dom(), f.cod(), std::move(map));
}

class Submonoid {
public:
    static Submonoid make(MonoidPtr ambient, std::vector<Elem> members) {
        std::vector<bool> mask(ambient->order(), false);
        for (Elem a : members) {
            if (a >= ambient->order()) throw InvalidMonoid("submonoid member out of range", {a});
            mask[a] = true;
        }
        if (!mask[ambient->identity()]) throw InvalidMonoid("submonoid lacks the identity", {ambient->identity()});
        Submonoid s(std::move(ambient), std::move(mask));
        for (Elem a : s.members_)
            for (Elem b : s.members_)
                if (!s.contains(s.ambient_->op(a, b))) throw InvalidMonoid("submonoid not closed", {a, b});
        return s;
    }

    static Submonoid assume_valid(MonoidPtr ambient, std::vector<bool> mask) {
        return Submonoid(std::move(ambient), std::move(mask));
    }

    const MonoidPtr& ambient() const noexcept { return ambient_; }
    std::span<const Elem> members() const noexcept { return members_; }
    bool contains(Elem a) const noexcept { return a < mask_.size() && mask_[a]; }
    std::size_t size() const noexcept { return members_.size(); }
    bool is_whole() const noexcept { return members_.size() == ambient_->order(); }

    friend bool operator==(const Submonoid& x, const Submonoid& y) {
        return x.members_ == y.members_ && same_object(x.ambient_, y.ambient_);
    }

private:
    Submonoid(MonoidPtr ambient, std::vector<bool> mask) : ambient_(std::move(ambient)), mask_(std::move(mask)) {
        for (Elem a = 0; a < mask_.size(); ++a)
            if (mask_[a]) members_.push_back(a);
    }

    MonoidPtr ambient_;
    std::vector<bool> mask_;
    std::vector<Elem> members_;
};

inline Submonoid kernel(const Hom& f) {
    std::vector<bool> mask(f.dom()->order());
    for (Elem a = 0; a < mask.size(); ++a) mask[a] = f(a) == f.cod()->identity();
    return Submonoid::assume_valid(f.dom(), std::move(mask));
}

inline Submonoid image(const Hom& f) {
    std::vector<bool> mask(f.cod()->order(), false);
    for (Elem b : f.map()) mask[b] = true;
    return Submonoid::assume_valid(f.cod(), std::move(mask));
}

/// Least submonoid containing `seed` and the identity.
inline Submonoid generated_submonoid(const MonoidPtr& m, std::span<const Elem> seed) {
    std::vector<bool> mask(m->order(), false);
    std::vector<Elem> members;
    auto add = [&](Elem a) {
        if (!mask[a]) mask[a] = true, members.push_back(a);
    };
    add(m->identity());
    for (Elem a : seed) {
        if (a >= m->order()) throw InvalidMonoid("seed element out of range", {a});
        add(a);
    }
    // Every pair is multiplied once both members are known.
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            add(m->op(members[i], members[j]));
            add(m->op(members[j], members[i]));
        }
    return Submonoid::assume_valid(m, std::move(mask));
}

inline Submonoid generated_submonoid(const MonoidPtr& m, std::initializer_list<Elem> seed) {
    return generated_submonoid(m, std::span<const Elem>(seed.begin(), seed.size()));
}

/// {a | h1(a) = h2(a)} for parallel homs.
inline Submonoid equalizer(const Hom& h1, const Hom& h2) {
    if (!same_object(h1.dom(), h2.dom()) || !same_object(h1.cod(), h2.cod()))
        throw DomainMismatch("equalizer: homs are not parallel");
    std::vector<bool> mask(h1.dom()->order());
    for (Elem a = 0; a < mask.size(); ++a) mask[a] = h1(a) == h2(a);
    return Submonoid::assume_valid(h1.dom(), std::move(mask));
}

/// A submonoid realized as a monoid of its own, with the inclusion.
struct Embedded {
    MonoidPtr object;
    Hom inclusion;
    std::vector<std::int64_t> position;  // ambient element -> index in object, -1 if absent

    std::optional<Elem> index_of(Elem ambient_elem) const {
        auto p = position[ambient_elem];
        if (p < 0) return std::nullopt;
        return static_cast<Elem>(p);
    }
};

inline Embedded as_monoid(const Submonoid& s) {
    const auto& amb = *s.ambient();
    std::vector<std::int64_t> pos(amb.order(), -1);
    auto members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<std::int64_t>(i);
    const std::size_t n = members.size();
    std::vector<Elem> flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            flat[i * n + j] = static_cast<Elem>(pos[amb.op(members[i], members[j])]);
    auto obj = share(Monoid::assume_valid(n, std::move(flat), static_cast<Elem>(pos[amb.identity()])));
    auto incl = Hom::assume_valid(obj, s.ambient(), std::vector<Elem>(members.begin(), members.end()));
    return Embedded{obj, std::move(incl), std::move(pos)};
}

/// h restricted to the embedded submonoids, or nullopt if h does not map
/// `dom` into `cod`.
inline std::optional<Hom> restrict_hom(const Hom& h, const Embedded& dom, const Embedded& cod) {
    std::vector<Elem> map(dom.object->order());
    for (Elem i = 0; i < map.size(); ++i) {
        auto t = cod.index_of(h(dom.inclusion(i)));
        if (!t) return std::nullopt;
        map[i] = *t;
    }
    return Hom::assume_valid(dom.object, cod.object, std::move(map));
}

/// Two-legged limit cone. `pairs` maps carrier indices to (left, right)
/// element pairs, listed in lexicographic order.
struct PairLimit {
    MonoidPtr object;
    Hom first;
    Hom second;
    std::vector<std::pair<Elem, Elem>> pairs;
    std::vector<std::int64_t> lookup;  // left * right_order + right -> index, -1 if absent
    std::size_t right_order = 0;

    std::optional<Elem> index_of(Elem left, Elem right) const {
        auto p = lookup[static_cast<std::size_t>(left) * right_order + right];
        if (p < 0) return std::nullopt;
        return static_cast<Elem>(p);
    }
};

namespace detail {

template <class Keep>
PairLimit pair_limit(const MonoidPtr& left, const MonoidPtr& right, Keep keep) {
    const std::size_t nl = left->order(), nr = right->order();
    std::vector<std::pair<Elem, Elem>> pairs;
    std::vector<std::int64_t> lookup(nl * nr, -1);
    for (Elem a = 0; a < nl; ++a)
        for (Elem x = 0; x < nr; ++x)
            if (keep(a, x)) {
                lookup[a * nr + x] = static_cast<std::int64_t>(pairs.size());
                pairs.emplace_back(a, x);
            }
    const std::size_t n = pairs.size();
    std::vector<Elem> flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Elem a = left->op(pairs[i].first, pairs[j].first);
            Elem x = right->op(pairs[i].second, pairs[j].second);
            flat[i * n + j] = static_cast<Elem>(lookup[a * nr + x]);
        }
    Elem id = static_cast<Elem>(lookup[left->identity() * nr + right->identity()]);
    auto obj = share(Monoid::assume_valid(n, std::move(flat), id));
    std::vector<Elem> p1(n), p2(n);
    for (std::size_t i = 0; i < n; ++i) p1[i] = pairs[i].first, p2[i] = pairs[i].second;
    return PairLimit{obj,
                     Hom::assume_valid(obj, left, std::move(p1)),
                     Hom::assume_valid(obj, right, std::move(p2)),
                     std::move(pairs),
                     std::move(lookup),
                     nr};
}

}  // namespace detail

inline PairLimit product(const MonoidPtr& m, const MonoidPtr& n) {
    return detail::pair_limit(m, n, [](Elem, Elem) { return true; });
}

/// A pair of homs with a shared codomain, f: A -> B and x: X -> B.
class Cospan {
public:
    Cospan(Hom left, Hom right) : left_(std::move(left)), right_(std::move(right)) {
        if (!same_object(left_.cod(), right_.cod())) throw DomainMismatch("cospan legs have different codomains");
    }
    const Hom& left() const noexcept { return left_; }
    const Hom& right() const noexcept { return right_; }

private:
    Hom left_;
    Hom right_;
};

/// A x_B X = {(a, x) | f(a) = x(x)} with its two projections.
inline PairLimit pullback(const Cospan& c) {
    const Hom& f = c.left();
    const Hom& x = c.right();
    return detail::pair_limit(f.dom(), x.dom(), [&](Elem a, Elem t) { return f(a) == x(t); });
}

/// The mediating hom <p, q>: T -> limit, or nullopt if (p, q) is not a cone
/// over the limit (some (p(t), q(t)) is not in the carrier).
inline std::optional<Hom> mediating(const PairLimit& lim, const Hom& p, const Hom& q) {
    if (!same_object(p.dom(), q.dom())) throw DomainMismatch("mediating: legs have different domains");
    if (!same_object(p.cod(), lim.first.cod()) || !same_object(q.cod(), lim.second.cod()))
        throw DomainMismatch("mediating: legs do not land in the limit's factors");
    std::vector<Elem> map(p.dom()->order());
    for (Elem t = 0; t < map.size(); ++t) {
        auto i = lim.index_of(p(t), q(t));
        if (!i) return std::nullopt;
        map[t] = *i;
    }
    return Hom::assume_valid(p.dom(), lim.object, std::move(map));
}

/// h1 x h2 between (sub)products: (a, x) -> (h1 a, h2 x). nullopt if the
/// image leaves the target carrier.
inline std::optional<Hom> pair_map(const Hom& h1, const Hom& h2, const PairLimit& dom, const PairLimit& cod) {
    std::vector<Elem> map(dom.object->order());
    for (Elem i = 0; i < map.size(); ++i) {
        auto [a, x] = dom.pairs[i];
        auto j = cod.index_of(h1(a), h2(x));
        if (!j) return std::nullopt;
        map[i] = *j;
    }
    return Hom::assume_valid(dom.object, cod.object, std::move(map));
}

}  // namespace mwb
