#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "mwb/catalog.hpp"
#include "mwb/commands.hpp"
#include "mwb/corpus.hpp"
#include "mwb/io.hpp"

using namespace mwb;
using io::json;

namespace {

const Corpus& corpus3() {
    static const Corpus c(CorpusParams{.max_order = 3});
    return c;
}

// Conjugates the table by a permutation so the identity lands at `at`.
Monoid relabeled(const Monoid& m, Elem at) {
    const auto n = m.order();
    std::vector<Elem> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[m.identity()], p[at]);
    std::vector<Elem> t(n * n);
    for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j) t[p[i] * n + p[j]] = p[m.op(i, j)];
    return Monoid::from_flat(n, t, p[m.identity()]);
}

std::filesystem::path temp_dir() {
    auto d = std::filesystem::temp_directory_path() / ("mwb_io_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST(Json, MonoidRoundTripIsCanonicalAndIdempotent) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& m : enumerate_monoids(n, true))
            for (Elem at = 0; at < n; ++at) {
                auto moved = relabeled(m, at);
                auto j = io::to_json(moved);
                EXPECT_EQ(j.at("identity"), 0);
                auto back = io::monoid_from_json(j);
                EXPECT_EQ(back, moved.normalized());
                EXPECT_EQ(io::to_json(back), j);
            }
}

TEST(Json, HomPointAndGPRoundTrip) {
    const auto& c = corpus3();
    for (const auto& f : c.surjections()) {
        auto j = io::to_json(f);
        EXPECT_EQ(io::to_json(io::hom_from_json(j)), j);
    }
    for (const auto& p : c.points()) {
        auto j = io::to_json(p);
        auto back = io::point_from_json(j);
        EXPECT_EQ(io::to_json(back), j);
        EXPECT_EQ(is_schreier_point(back).holds, is_schreier_point(p).holds);
    }
    for (const auto& gp : c.generalized_points()) {
        auto j = io::to_json(gp);
        auto back = io::gp_from_json(j);
        EXPECT_EQ(io::to_json(back), j);
        EXPECT_EQ(is_schreier_gp(back).holds, is_schreier_gp(gp).holds);
    }
}

TEST(Json, HomRelabelsWithItsCarriers) {
    // Z2 with identity at 1, mapped identically onto itself.
    auto z2 = share(relabeled(*catalog::cyclic(2), 1));
    auto j = io::to_json(Hom::identity(z2));
    EXPECT_EQ(j.at("map"), json::array({0, 1}));
    auto m3 = share(relabeled(*catalog::m3(), 2));
    auto j2 = io::to_json(Hom::identity(m3));
    EXPECT_EQ(j2.at("map"), json::array({0, 1, 2}));
    EXPECT_EQ(io::hom_from_json(j2).dom()->identity(), 0u);
}

TEST(Json, PairLimitPairsMatchProjections) {
    auto z2 = catalog::cyclic(2);
    auto p = product(catalog::m3(), z2);
    auto j = io::to_json(p);
    const auto& pairs = j.at("pairs");
    ASSERT_EQ(pairs.size(), 6u);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        EXPECT_EQ(pairs[i][0], j.at("first").at("map")[i]);
        EXPECT_EQ(pairs[i][1], j.at("second").at("map")[i]);
    }
    EXPECT_EQ(pairs[0], json::array({0, 0}));
}

TEST(Json, CheckResultShape) {
    EXPECT_EQ(io::to_json(CheckResult::pass()), (json{{"holds", true}, {"witness", nullptr}}));
    EXPECT_EQ(io::to_json(CheckResult::fail({3})), (json{{"holds", false}, {"witness", 3}}));
    EXPECT_EQ(io::to_json(CheckResult::fail({1, 2})), (json{{"holds", false}, {"witness", {1, 2}}}));
}

TEST(Json, ReadErrors) {
    EXPECT_THROW(io::monoid_from_json(json{{"order", 1}, {"identity", 0}}), ParseError);
    EXPECT_THROW(io::monoid_from_json(json{{"order", 2}, {"identity", 0}, {"table", {{0}}}}), ParseError);
    EXPECT_THROW(io::monoid_from_json(json{{"order", 1}, {"identity", -1}, {"table", {{0}}}}), ParseError);
    EXPECT_THROW(io::monoid_from_json(json::array()), ParseError);
    try {
        io::monoid_from_json(json{{"order", 2}, {"identity", 1}, {"table", {{0, 1}, {1, 0}}}});
        FAIL() << "identity law should fail";
    } catch (const InvalidMonoid& e) {
        EXPECT_FALSE(e.witness.empty());
    }
    auto z2 = io::to_json(*catalog::cyclic(2));
    EXPECT_THROW(io::hom_from_json(json{{"dom", z2}, {"cod", z2}, {"map", {1, 1}}}), InvalidHom);
    EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), ParseError);
}

TEST(Json, MonoidReferencesResolveAgainstFileDirectory) {
    auto dir = temp_dir();
    std::ofstream(dir / "z2.json") << io::to_json(*catalog::cyclic(2)).dump();
    std::ofstream(dir / "point.json") << R"({"f": {"dom": "z2.json", "cod": "z2.json", "map": [0, 1]},
                                             "s": {"dom": "z2.json", "cod": "z2.json", "map": [0, 1]}})";
    auto p = io::point_from_json(io::read_json_file(dir / "point.json"), dir);
    EXPECT_TRUE(p.f().is_identity());
    std::filesystem::remove_all(dir);
}

TEST(Cache, EnumerateWritesReadableCache) {
    auto dir = temp_dir();
    for (bool iso : {true, false}) {
        std::ostringstream out, err;
        commands::EnumerateArgs args{3, iso, dir / "cache.jsonl"};
        ASSERT_EQ(commands::enumerate(args, out, err), 0);
        std::ifstream in(dir / "cache.jsonl");
        json header;
        auto monoids = io::read_cache(in, &header);
        EXPECT_EQ(header.at("params").at("up_to_iso"), iso);
        EXPECT_EQ(monoids, enumerate_monoids(3, iso));
        EXPECT_EQ(json::parse(out.str()).at("count"), monoids.size());
    }
    std::filesystem::remove_all(dir);
}

TEST(Cache, RejectsForeignHeader) {
    std::istringstream in(R"({"generator":"other"})" "\n");
    EXPECT_THROW(io::read_cache(in), ParseError);
    std::istringstream empty("");
    EXPECT_THROW(io::read_cache(empty), ParseError);
}
