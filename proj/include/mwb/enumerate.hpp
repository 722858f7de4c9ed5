#pragma once

// Enumeration of finite monoids and homomorphisms, with canonical forms for
// isomorphism testing.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "mwb/monoid.hpp"

namespace mwb {

/// Relabeling that minimizes the flat table lexicographically among all
/// relabelings sending the identity to 0. Factorial in the order; meant for
/// order <= 8.
inline Monoid canonical_form(const Monoid& m) {
    const std::size_t n = m.order();
    if (n > 9) throw Error("canonical_form: order too large for exhaustive relabeling");
    std::vector<Elem> rest;
    for (Elem a = 0; a < n; ++a)
        if (a != m.identity()) rest.push_back(a);
    // perm[new] = old
    std::vector<Elem> perm(n), inv(n);
    std::vector<Elem> best, cand(n * n);
    do {
        perm[0] = m.identity();
        std::copy(rest.begin(), rest.end(), perm.begin() + 1);
        for (Elem i = 0; i < n; ++i) inv[perm[i]] = i;
        bool worse = false, better = best.empty();
        for (std::size_t i = 0; i < n && !worse; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Elem v = inv[m.op(perm[i], perm[j])];
                cand[i * n + j] = v;
                if (!better) {
                    Elem b = best[i * n + j];
                    if (v < b) better = true;
                    else if (v > b) { worse = true; break; }
                }
            }
        if (better && !worse) best = cand;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return Monoid::assume_valid(n, std::move(best), 0);
}

namespace detail {

class TableSearch {
public:
    static constexpr Elem unset = static_cast<Elem>(-1);

    explicit TableSearch(std::size_t n) : n_(n), t_(n * n, unset) {
        for (Elem i = 0; i < n; ++i) t_[i] = i, t_[i * n] = i;
        for (Elem i = 1; i < n; ++i)
            for (Elem j = 1; j < n; ++j) cells_.push_back(i * n + j);
    }

    std::size_t cell_count() const { return cells_.size(); }

    bool assign_prefix(std::span<const Elem> prefix) {
        if (prefix.size() > cells_.size()) return false;
        for (std::size_t k = 0; k < prefix.size(); ++k) {
            if (prefix[k] >= n_) return false;
            t_[cells_[k]] = prefix[k];
            if (!consistent()) return false;
        }
        return true;
    }

    // Visits every completion of cells [depth, end); visit(table) -> bool
    // returns false to stop.
    template <class Visit>
    bool run(std::size_t depth, std::size_t stop_depth, Visit& visit) {
        if (depth == stop_depth) return visit(t_);
        auto cell = cells_[depth];
        for (Elem v = 0; v < n_; ++v) {
            t_[cell] = v;
            if (consistent() && !run(depth + 1, stop_depth, visit)) {
                t_[cell] = unset;
                return false;
            }
        }
        t_[cell] = unset;
        return true;
    }

private:
    bool consistent() const {
        for (Elem x = 1; x < n_; ++x)
            for (Elem y = 1; y < n_; ++y) {
                Elem xy = t_[x * n_ + y];
                if (xy == unset) continue;
                for (Elem z = 1; z < n_; ++z) {
                    Elem yz = t_[y * n_ + z];
                    if (yz == unset) continue;
                    Elem l = t_[xy * n_ + z], r = t_[x * n_ + yz];
                    if (l != unset && r != unset && l != r) return false;
                }
            }
        return true;
    }

    std::size_t n_;
    std::vector<Elem> t_;
    std::vector<std::size_t> cells_;
};

}  // namespace detail

/// Visits every monoid on {0..n-1} with identity 0, in lexicographic order
/// of the table, optionally only the canonical representative of each
/// isomorphism class. `prefix` pins the leading non-identity cells (row-major
/// over rows/columns 1..n-1), which splits the stream for parallel workers.
template <class Visit>
void for_each_monoid(std::size_t n, bool up_to_iso, Visit&& visit, std::span<const Elem> prefix = {}) {
    if (n == 0) throw Error("monoid order must be positive");
    detail::TableSearch search(n);
    if (!search.assign_prefix(prefix)) return;
    auto leaf = [&](const std::vector<Elem>& table) {
        auto m = Monoid::assume_valid(n, table, 0);
        if (up_to_iso && canonical_form(m) != m) return true;
        if constexpr (std::is_same_v<std::invoke_result_t<Visit&, Monoid&&>, bool>) {
            return visit(std::move(m));
        } else {
            visit(std::move(m));
            return true;
        }
    };
    search.run(prefix.size(), search.cell_count(), leaf);
}

inline std::vector<Monoid> enumerate_monoids(std::size_t n, bool up_to_iso) {
    std::vector<Monoid> out;
    for_each_monoid(n, up_to_iso, [&](Monoid m) { out.push_back(std::move(m)); });
    return out;
}

/// Consistent assignments of the first `depth` free cells.
inline std::vector<std::vector<Elem>> monoid_prefixes(std::size_t n, std::size_t depth) {
    detail::TableSearch search(n);
    depth = std::min(depth, search.cell_count());
    std::vector<std::vector<Elem>> out;
    std::vector<std::size_t> cells;
    for (Elem i = 1; i < n; ++i)
        for (Elem j = 1; j < n; ++j) cells.push_back(i * n + j);
    auto collect = [&](const std::vector<Elem>& t) {
        std::vector<Elem> p(depth);
        for (std::size_t k = 0; k < depth; ++k) p[k] = t[cells[k]];
        out.push_back(std::move(p));
        return true;
    };
    search.run(0, depth, collect);
    return out;
}

/// Greedy generating set: walk elements in index order, keep those not yet
/// generated.
inline std::vector<Elem> generating_set(const MonoidPtr& m) {
    std::vector<Elem> gens;
    auto gen = generated_submonoid(m, gens);
    for (Elem a = 0; a < m->order(); ++a)
        if (!gen.contains(a)) {
            gens.push_back(a);
            gen = generated_submonoid(m, gens);
        }
    return gens;
}

namespace detail {

// Backtracks over images of a generating set of `dom`, extending each
// partial assignment to the generated submonoid and pruning on conflicts.
// visit(map) -> bool returns false to stop.
template <class Visit>
void search_homs(const MonoidPtr& dom, const MonoidPtr& cod, bool injective, Visit&& visit) {
    constexpr Elem unset = static_cast<Elem>(-1);
    const auto gens = generating_set(dom);
    const std::size_t n = dom->order(), m = cod->order();
    if (injective && n > m) return;
    std::vector<Elem> assigned(gens.size());
    std::vector<Elem> img(n);
    std::vector<Elem> queue;
    queue.reserve(n);

    auto extend = [&](std::size_t k) {
        std::fill(img.begin(), img.end(), unset);
        img[dom->identity()] = cod->identity();
        queue.clear();
        queue.push_back(dom->identity());
        for (std::size_t q = 0; q < queue.size(); ++q) {
            Elem x = queue[q];
            for (std::size_t g = 0; g < k; ++g) {
                Elem y = dom->op(x, gens[g]);
                Elem v = cod->op(img[x], assigned[g]);
                if (img[y] == unset) {
                    img[y] = v;
                    queue.push_back(y);
                } else if (img[y] != v) {
                    return false;
                }
            }
        }
        if (injective) {
            std::vector<bool> hit(m, false);
            for (Elem v : img) {
                if (v == unset) continue;
                if (hit[v]) return false;
                hit[v] = true;
            }
        }
        return true;
    };

    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == gens.size()) return visit(img);
        for (Elem v = 0; v < m; ++v) {
            assigned[k] = v;
            if (extend(k + 1) && !rec(k + 1)) return false;
        }
        return true;
    };
    if (gens.empty()) {
        if (extend(0)) visit(img);
        return;
    }
    rec(0);
}

}  // namespace detail

/// All homomorphisms dom -> cod (optionally only surjections), sorted by
/// their element maps.
inline std::vector<Hom> enumerate_homs(const MonoidPtr& dom, const MonoidPtr& cod, bool surjective_only = false) {
    std::vector<std::vector<Elem>> maps;
    detail::search_homs(dom, cod, false, [&](const std::vector<Elem>& img) {
        maps.push_back(img);
        return true;
    });
    std::sort(maps.begin(), maps.end());
    std::vector<Hom> out;
    out.reserve(maps.size());
    for (auto& mp : maps) {
        auto h = Hom::assume_valid(dom, cod, std::move(mp));
        if (!surjective_only || h.is_surjective()) out.push_back(std::move(h));
    }
    return out;
}

struct ElementOrder {
    std::size_t index;   // smallest i with a^i repeated later
    std::size_t period;  // cycle length of the powers
    friend auto operator<=>(const ElementOrder&, const ElementOrder&) = default;
};

inline ElementOrder element_order(const Monoid& m, Elem a) {
    std::vector<Elem> powers{a};
    while (true) {
        Elem next = m.op(powers.back(), a);
        auto it = std::find(powers.begin(), powers.end(), next);
        if (it != powers.end()) {
            auto i = static_cast<std::size_t>(it - powers.begin()) + 1;
            return {i, powers.size() + 1 - i};
        }
        powers.push_back(next);
    }
}

/// Isomorphism invariants used to reject candidates before backtracking.
struct MonoidInvariants {
    std::size_t order = 0;
    std::size_t idempotents = 0;
    std::vector<ElementOrder> order_profile;  // sorted
    friend bool operator==(const MonoidInvariants&, const MonoidInvariants&) = default;
};

inline MonoidInvariants invariants(const Monoid& m) {
    MonoidInvariants inv;
    inv.order = m.order();
    for (Elem a = 0; a < m.order(); ++a) {
        inv.idempotents += m.is_idempotent(a) ? 1 : 0;
        inv.order_profile.push_back(element_order(m, a));
    }
    std::sort(inv.order_profile.begin(), inv.order_profile.end());
    return inv;
}

struct IsoResult {
    bool isomorphic = false;
    std::optional<Hom> witness;
};

inline IsoResult are_isomorphic(const MonoidPtr& m, const MonoidPtr& n) {
    if (m->order() != n->order()) return {};
    if (invariants(*m) != invariants(*n)) return {};
    IsoResult result;
    detail::search_homs(m, n, true, [&](const std::vector<Elem>& img) {
        result.isomorphic = true;
        result.witness = Hom::assume_valid(m, n, img);
        return false;
    });
    return result;
}

}  // namespace mwb
