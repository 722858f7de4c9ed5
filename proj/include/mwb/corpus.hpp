#pragma once

// Corpora of small monoids and the instances built over them. Exhaustive up
// to a configurable order, seeded sampling above it.

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mwb/enumerate.hpp"
#include "mwb/parallel.hpp"
#include "mwb/points.hpp"

namespace mwb {

inline constexpr std::uint64_t default_seed = 20240531;

struct CorpusParams {
    std::size_t max_order = 3;
    std::size_t exhaustive_up_to = 4;  // orders above this are sampled
    std::size_t sample_size = 24;      // monoids drawn per sampled order
    std::uint64_t seed = default_seed;
};

/// Draws `k` of `n` indices with a seeded Fisher-Yates prefix, reducing raw
/// mt19937_64 output with `r % bound`. Returned in ascending order.
inline std::vector<std::size_t> seeded_sample(std::size_t n, std::size_t k, std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    if (k >= n) return idx;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

class Corpus {
public:
    explicit Corpus(CorpusParams params, std::size_t jobs = 1) : params_(params) {
        if (params_.max_order == 0) throw Error("corpus: max order must be positive");
        for (std::size_t n = 1; n <= params_.max_order; ++n) {
            auto all = enumerate_monoids(n, true);
            if (n <= params_.exhaustive_up_to) {
                for (auto& m : all) monoids_.push_back(share(std::move(m)));
            } else {
                for (auto i : seeded_sample(all.size(), params_.sample_size, params_.seed + n))
                    monoids_.push_back(share(all[i]));
            }
        }
        const std::size_t k = monoids_.size();
        homs_ = parallel_map<std::vector<Hom>>(k * k, jobs, [&](std::size_t ij) {
            return enumerate_homs(monoids_[ij / k], monoids_[ij % k]);
        });
    }

    const CorpusParams& params() const noexcept { return params_; }
    std::span<const MonoidPtr> monoids() const noexcept { return monoids_; }
    std::size_t size() const noexcept { return monoids_.size(); }

    /// Corpus monoids of order at most n.
    std::vector<std::size_t> indices_up_to(std::size_t n) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < monoids_.size(); ++i)
            if (monoids_[i]->order() <= n) out.push_back(i);
        return out;
    }

    const std::vector<Hom>& homs(std::size_t from, std::size_t to) const { return homs_[from * size() + to]; }

    /// Position of a corpus monoid. Instances built from the corpus share
    /// its pointers; anything else is matched structurally.
    std::size_t index_of(const MonoidPtr& m) const {
        for (std::size_t i = 0; i < monoids_.size(); ++i)
            if (monoids_[i] == m) return i;
        for (std::size_t i = 0; i < monoids_.size(); ++i)
            if (*monoids_[i] == *m) return i;
        throw Error("corpus: monoid not in corpus");
    }

    /// True iff every monoid of order n is present up to isomorphism.
    bool exhaustive_at(std::size_t n) const { return n <= params_.max_order && n <= params_.exhaustive_up_to; }

    /// Surjections between corpus monoids with |A| <= max_dom, sorted by
    /// |A| + |B|, then by corpus position.
    std::vector<Hom> surjections(std::size_t max_dom = static_cast<std::size_t>(-1)) const {
        std::vector<Hom> out;
        for_each_pair_by_size([&](std::size_t i, std::size_t j) {
            if (monoids_[i]->order() > max_dom) return;
            for (const auto& f : homs(i, j))
                if (f.is_surjective()) out.push_back(f);
        });
        return out;
    }

    /// Every point (f, s) with A, B in the corpus.
    std::vector<Point> points(std::size_t max_dom = static_cast<std::size_t>(-1)) const {
        std::vector<Point> out;
        for_each_pair_by_size([&](std::size_t i, std::size_t j) {
            if (monoids_[i]->order() > max_dom) return;
            for (const auto& f : homs(i, j)) {
                if (!f.is_surjective()) continue;
                for (const auto& s : homs(j, i)) {
                    bool split = true;
                    for (Elem b = 0; b < f.cod()->order() && split; ++b) split = f(s(b)) == b;
                    if (split) out.push_back(Point::assume_valid(f, s));
                }
            }
        });
        return out;
    }

    /// Every generalized point (f, g) with A, B, C in the corpus, sorted by
    /// |A| + |B| + |C|, then by corpus positions.
    std::vector<GeneralizedPoint> generalized_points(std::size_t max_order = static_cast<std::size_t>(-1)) const {
        struct Key {
            std::size_t total, a, b, c;
        };
        std::vector<Key> keys;
        const std::size_t k = size();
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                for (std::size_t c = 0; c < k; ++c) {
                    const auto na = monoids_[a]->order(), nb = monoids_[b]->order(), nc = monoids_[c]->order();
                    if (nb > na || nb > nc || std::max({na, nb, nc}) > max_order) continue;
                    keys.push_back({na + nb + nc, a, b, c});
                }
        std::stable_sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) { return x.total < y.total; });
        std::vector<GeneralizedPoint> out;
        std::vector<bool> hit;
        for (const auto& key : keys)
            for (const auto& f : homs(key.a, key.b)) {
                if (!f.is_surjective()) continue;
                for (const auto& g : homs(key.c, key.a)) {
                    hit.assign(f.cod()->order(), false);
                    std::size_t covered = 0;
                    for (Elem c = 0; c < g.dom()->order(); ++c) {
                        Elem b = f(g(c));
                        if (!hit[b]) hit[b] = true, ++covered;
                    }
                    if (covered == f.cod()->order()) out.push_back(GeneralizedPoint::assume_valid(f, g));
                }
            }
        return out;
    }

private:
    template <class Fn>
    void for_each_pair_by_size(Fn&& fn) const {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) pairs.emplace_back(i, j);
        std::stable_sort(pairs.begin(), pairs.end(), [&](auto x, auto y) {
            return monoids_[x.first]->order() + monoids_[x.second]->order() <
                   monoids_[y.first]->order() + monoids_[y.second]->order();
        });
        for (auto [i, j] : pairs) fn(i, j);
    }

    CorpusParams params_;
    std::vector<MonoidPtr> monoids_;
    std::vector<std::vector<Hom>> homs_;
};

}  // namespace mwb
