#include <gtest/gtest.h>

#include <algorithm>

#include "mwb/catalog.hpp"
#include "mwb/enumerate.hpp"
#include "mwb/monoid.hpp"
#include "oracles.hpp"

using namespace mwb;

namespace {

std::vector<Elem> members(const Submonoid& s) { return {s.members().begin(), s.members().end()}; }

std::vector<MonoidPtr> small_corpus(std::size_t max_order) {
    std::vector<MonoidPtr> out;
    for (std::size_t n = 1; n <= max_order; ++n)
        for (auto& m : enumerate_monoids(n, true)) out.push_back(share(std::move(m)));
    return out;
}

}  // namespace

TEST(ValidateMonoid, TrivialAndZ2) {
    auto z1 = validate_monoid({{0}}, 0);
    EXPECT_EQ(z1.order(), 1u);
    auto z2 = validate_monoid({{0, 1}, {1, 0}}, 0);
    EXPECT_EQ(z2.op(1, 1), 0u);
}

TEST(ValidateMonoid, IdentityLawViolationReportsElement) {
    try {
        validate_monoid({{0, 1}, {1, 0}}, 1);
        FAIL() << "expected InvalidMonoid";
    } catch (const InvalidMonoid& e) {
        EXPECT_EQ(e.witness, std::vector<Elem>{0});
        EXPECT_NE(std::string(e.what()).find("table[1][0]=1"), std::string::npos);
    }
}

TEST(ValidateMonoid, AssociativityViolationReportsFirstTriple) {
    // 1*1 = 2, 2*1 = 1, 1*2 = 2: (1*1)*1 = 1 but 1*(1*1) = 2.
    try {
        validate_monoid({{0, 1, 2}, {1, 2, 2}, {2, 1, 2}}, 0);
        FAIL() << "expected InvalidMonoid";
    } catch (const InvalidMonoid& e) {
        ASSERT_EQ(e.witness.size(), 3u);
        const auto w = e.witness;
        auto m = Monoid::assume_valid(3, {0, 1, 2, 1, 2, 2, 2, 1, 2}, 0);
        EXPECT_NE(m.op(m.op(w[0], w[1]), w[2]), m.op(w[0], m.op(w[1], w[2])));
    }
}

TEST(ValidateMonoid, RejectsRaggedAndOutOfRange) {
    EXPECT_THROW(validate_monoid({{0, 1}, {1}}, 0), InvalidMonoid);
    EXPECT_THROW(validate_monoid({{0, 2}, {1, 0}}, 0), InvalidMonoid);
    EXPECT_THROW(validate_monoid({}, 0), InvalidMonoid);
}

TEST(ValidateMonoid, NormalizeMovesIdentityToZero) {
    // Z2 with identity at index 1.
    auto m = validate_monoid({{1, 0}, {0, 1}}, 1);
    auto n = m.normalized();
    EXPECT_EQ(n.identity(), 0u);
    EXPECT_EQ(n, *catalog::cyclic(2));
}

TEST(Kernel, Examples) {
    auto z2 = catalog::cyclic(2);
    EXPECT_EQ(members(kernel(Hom::zero(z2, catalog::trivial()))), (std::vector<Elem>{0, 1}));
    EXPECT_EQ(members(kernel(Hom::identity(z2))), (std::vector<Elem>{0}));
    EXPECT_EQ(members(kernel(catalog::reduction(4, 2))), (std::vector<Elem>{0, 2}));
}

TEST(GeneratedSubmonoid, Examples) {
    auto z4 = catalog::cyclic(4);
    EXPECT_EQ(members(generated_submonoid(z4, std::vector<Elem>{})), (std::vector<Elem>{0}));
    EXPECT_EQ(members(generated_submonoid(z4, {1})), (std::vector<Elem>{0, 1, 2, 3}));
    EXPECT_EQ(members(generated_submonoid(z4, {2})), (std::vector<Elem>{0, 2}));
}

TEST(GeneratedSubmonoid, IsLeastClosedSuperset) {
    for (const auto& m : small_corpus(4)) {
        const std::size_t n = m->order();
        for (std::uint32_t seed_mask = 0; seed_mask < (1u << n); ++seed_mask) {
            std::vector<Elem> seed;
            for (Elem a = 0; a < n; ++a)
                if (seed_mask >> a & 1) seed.push_back(a);
            auto gen = generated_submonoid(m, seed);
            EXPECT_NO_THROW(Submonoid::make(m, members(gen)));
            for (Elem a : seed) EXPECT_TRUE(gen.contains(a));
            // Every closed superset of seed + identity contains gen.
            for (std::uint32_t sup = 0; sup < (1u << n); ++sup) {
                if ((sup & seed_mask) != seed_mask || !(sup >> m->identity() & 1)) continue;
                bool closed = true;
                for (Elem a = 0; a < n && closed; ++a)
                    for (Elem b = 0; b < n && closed; ++b)
                        if ((sup >> a & 1) && (sup >> b & 1)) closed = sup >> m->op(a, b) & 1;
                if (!closed) continue;
                for (Elem a : gen.members()) EXPECT_TRUE(sup >> a & 1);
            }
        }
    }
}

TEST(Image, Examples) {
    auto z2 = catalog::cyclic(2);
    EXPECT_EQ(members(image(Hom::identity(z2))), (std::vector<Elem>{0, 1}));
    EXPECT_EQ(members(image(Hom::zero(catalog::trivial(), z2))), (std::vector<Elem>{0}));
    EXPECT_EQ(members(image(catalog::reduction(4, 2))), (std::vector<Elem>{0, 1}));
}

TEST(Compose, Examples) {
    auto f = catalog::reduction(4, 2);
    EXPECT_EQ(compose(f, Hom::identity(f.dom())), f);
    EXPECT_EQ(compose(Hom::identity(f.cod()), f), f);
    auto g = Hom::make(catalog::cyclic(2), catalog::cyclic(4), {0, 2});
    auto fg = compose(f, g);
    EXPECT_EQ(std::vector<Elem>(fg.map().begin(), fg.map().end()), (std::vector<Elem>{0, 0}));
    EXPECT_THROW(compose(g, g), DomainMismatch);
}

TEST(Compose, ImageShrinksAndIsPreservedBySurjections) {
    auto corpus = small_corpus(3);
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            for (const auto& c : corpus)
                for (const auto& g : enumerate_homs(c, a))
                    for (const auto& f : enumerate_homs(a, b)) {
                        auto fg = image(compose(f, g));
                        auto fi = image(f);
                        for (Elem x : fg.members()) EXPECT_TRUE(fi.contains(x));
                        if (g.is_surjective()) { EXPECT_EQ(fg, fi); }
                    }
}

TEST(Product, Examples) {
    auto z2 = catalog::cyclic(2);
    auto z3 = catalog::cyclic(3);
    auto unit = product(catalog::trivial(), z3);
    EXPECT_TRUE(are_isomorphic(unit.object, z3).isomorphic);
    auto sq = product(z2, z2);
    EXPECT_EQ(sq.object->order(), 4u);
    EXPECT_TRUE(sq.first.is_surjective());
    EXPECT_TRUE(sq.second.is_surjective());
    auto p = product(z2, z3);
    EXPECT_NO_THROW(Monoid::from_flat(6, {p.object->flat().begin(), p.object->flat().end()}, p.object->identity()));
    auto iso = are_isomorphic(p.object, catalog::cyclic(6));
    ASSERT_TRUE(iso.isomorphic);
    EXPECT_TRUE(iso.witness->is_injective());
}

TEST(Pullback, AlongIdentityRecoversDomain) {
    auto f = catalog::reduction(4, 2);
    auto pb = pullback(Cospan(f, Hom::identity(f.cod())));
    EXPECT_EQ(pb.object->order(), 4u);
    EXPECT_TRUE(pb.first.is_injective());
    EXPECT_TRUE(pb.first.is_surjective());
}

TEST(Pullback, OverTerminalIsProduct) {
    auto z2 = catalog::cyclic(2);
    auto t = Hom::zero(z2, catalog::trivial());
    auto pb = pullback(Cospan(t, t));
    EXPECT_EQ(pb.object->order(), 4u);
    EXPECT_TRUE(are_isomorphic(pb.object, product(z2, z2).object).isomorphic);
}

TEST(Pullback, KernelPairOfReduction) {
    auto f = catalog::reduction(4, 2);
    auto pb = pullback(Cospan(f, f));
    ASSERT_EQ(pb.object->order(), 8u);
    for (auto [a, x] : pb.pairs) EXPECT_EQ(a % 2, x % 2);
    EXPECT_NO_THROW(Monoid::from_flat(8, {pb.object->flat().begin(), pb.object->flat().end()}, pb.object->identity()));
}

TEST(Pullback, UniversalPropertyExhaustive) {
    auto corpus = small_corpus(2);
    auto test_objects = small_corpus(3);
    std::size_t cones = 0;
    for (const auto& a : corpus)
        for (const auto& x : corpus)
            for (const auto& b : corpus)
                for (const auto& f : enumerate_homs(a, b))
                    for (const auto& xh : enumerate_homs(x, b)) {
                        auto pb = pullback(Cospan(f, xh));
                        for (const auto& t : test_objects)
                            for (const auto& p : enumerate_homs(t, a))
                                for (const auto& q : enumerate_homs(t, x)) {
                                    if (compose(f, p) != compose(xh, q)) continue;
                                    ++cones;
                                    std::size_t factorizations = 0;
                                    for (const auto& u : enumerate_homs(t, pb.object))
                                        if (compose(pb.first, u) == p && compose(pb.second, u) == q) ++factorizations;
                                    EXPECT_EQ(factorizations, 1u);
                                    auto u = mediating(pb, p, q);
                                    ASSERT_TRUE(u.has_value());
                                }
                    }
    EXPECT_GT(cones, 0u);
}

TEST(Enumerate, CountsMatchNaiveOracle) {
    EXPECT_EQ(enumerate_monoids(1, true).size(), 1u);
    for (std::size_t n = 1; n <= 4; ++n) {
        EXPECT_EQ(enumerate_monoids(n, true).size(), oracle::count_up_to_iso(n)) << n;
        EXPECT_EQ(enumerate_monoids(n, false).size(), oracle::all_monoid_tables(n).size()) << n;
    }
    EXPECT_EQ(enumerate_monoids(2, true).size(), 2u);
    EXPECT_EQ(enumerate_monoids(3, true).size(), 7u);
    EXPECT_EQ(enumerate_monoids(4, true).size(), 35u);
}

TEST(Enumerate, OutputIsValidSortedAndCanonical) {
    for (std::size_t n = 1; n <= 4; ++n) {
        auto all = enumerate_monoids(n, false);
        for (std::size_t i = 0; i < all.size(); ++i) {
            const auto& m = all[i];
            EXPECT_NO_THROW(validate_monoid(m.rows(), m.identity()));
            if (i > 0) { EXPECT_TRUE(std::ranges::lexicographical_compare(all[i - 1].flat(), m.flat())); }
        }
        for (const auto& m : enumerate_monoids(n, true)) EXPECT_EQ(canonical_form(m), m);
    }
}

TEST(Enumerate, PrefixSplitCoversStream) {
    for (std::size_t n : {3u, 4u}) {
        std::vector<Monoid> split;
        for (const auto& prefix : monoid_prefixes(n, 2))
            for_each_monoid(n, true, [&](Monoid m) { split.push_back(std::move(m)); }, prefix);
        EXPECT_EQ(split, enumerate_monoids(n, true));
    }
}

TEST(EnumerateHoms, Examples) {
    auto z1 = catalog::trivial();
    for (const auto& m : small_corpus(3)) EXPECT_EQ(enumerate_homs(z1, m).size(), 1u);
    auto z2 = catalog::cyclic(2);
    auto homs = enumerate_homs(z2, z2);
    ASSERT_EQ(homs.size(), 2u);
    EXPECT_TRUE(homs[0].map()[1] == 0 && homs[1].is_identity());
    auto surj = enumerate_homs(catalog::cyclic(4), z2, true);
    ASSERT_EQ(surj.size(), 1u);
    EXPECT_EQ(surj[0], catalog::reduction(4, 2));
}

TEST(EnumerateHoms, MatchesBruteForce) {
    auto corpus = small_corpus(3);
    for (const auto& m : corpus)
        for (const auto& n : corpus) {
            std::vector<std::vector<Elem>> got;
            for (const auto& h : enumerate_homs(m, n)) got.emplace_back(h.map().begin(), h.map().end());
            EXPECT_EQ(got, oracle::all_hom_maps(*m, *n));
        }
}

TEST(Isomorphism, Examples) {
    auto z2 = catalog::cyclic(2);
    auto self = are_isomorphic(z2, z2);
    ASSERT_TRUE(self.isomorphic);
    EXPECT_TRUE(self.witness->is_identity());
    EXPECT_FALSE(are_isomorphic(z2, catalog::semilattice2()).isomorphic);
}

TEST(Isomorphism, ReflexiveSymmetricAndInvariantRespecting) {
    auto corpus = small_corpus(4);
    for (const auto& m : corpus)
        for (const auto& n : corpus) {
            auto mn = are_isomorphic(m, n);
            EXPECT_EQ(mn.isomorphic, are_isomorphic(n, m).isomorphic);
            // Distinct canonical representatives are never isomorphic.
            EXPECT_EQ(mn.isomorphic, m == n);
            if (mn.isomorphic) { EXPECT_EQ(invariants(*m), invariants(*n)); }
        }
    // A relabeled copy is found isomorphic.
    for (const auto& m : corpus) {
        if (m->order() < 3) continue;
        auto flat = std::vector<Elem>(m->flat().begin(), m->flat().end());
        const std::size_t n = m->order();
        auto swap = [&](Elem x) -> Elem { return x == 1 ? 2 : (x == 2 ? 1 : x); };
        std::vector<Elem> relabeled(n * n);
        for (Elem i = 0; i < n; ++i)
            for (Elem j = 0; j < n; ++j) relabeled[swap(i) * n + swap(j)] = swap(flat[i * n + j]);
        auto copy = share(Monoid::from_flat(n, relabeled, 0));
        auto r = are_isomorphic(m, copy);
        ASSERT_TRUE(r.isomorphic);
        EXPECT_NO_THROW(Hom::make(m, copy, {r.witness->map().begin(), r.witness->map().end()}));
    }
}

TEST(Hom, MakeValidates) {
    auto z2 = catalog::cyclic(2);
    EXPECT_THROW(Hom::make(z2, z2, {1, 0}), InvalidHom);
    EXPECT_THROW(Hom::make(z2, z2, {0}), InvalidHom);
    auto s = catalog::semilattice2();
    // Z2 -> {1,0}: 1 -> 0 is not multiplicative (1+1 = 0 but 0*0 = 0 != 1).
    EXPECT_THROW(Hom::make(z2, s, {0, 1}), InvalidHom);
}

TEST(Submonoid, MakeValidates) {
    auto z4 = catalog::cyclic(4);
    EXPECT_NO_THROW(Submonoid::make(z4, {0, 2}));
    EXPECT_THROW(Submonoid::make(z4, {0, 1}), InvalidMonoid);
    EXPECT_THROW(Submonoid::make(z4, {2}), InvalidMonoid);
}

TEST(Degenerate, TrivialMonoidEverywhere) {
    auto z1 = catalog::trivial();
    auto id = Hom::identity(z1);
    EXPECT_EQ(kernel(id).size(), 1u);
    EXPECT_EQ(product(z1, z1).object->order(), 1u);
    EXPECT_EQ(pullback(Cospan(id, id)).object->order(), 1u);
    EXPECT_EQ(enumerate_homs(z1, z1).size(), 1u);
    EXPECT_TRUE(are_isomorphic(z1, z1).isomorphic);
    EXPECT_EQ(canonical_form(*z1), *z1);
}
