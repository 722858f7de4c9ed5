#pragma once

// JSON forms of every value the workbench produces or reads.
//
// Output is canonical: every monoid is written with its identity at index
// 0 (element 0 and the identity trade places), and maps and pairings are
// relabeled to match. Input accepts any identity index. Monoids inside a
// hom file may be given inline or as a path to a monoid file, resolved
// against the directory of the file being read.

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "mwb/constructions.hpp"
#include "mwb/monoid.hpp"
#include "mwb/points.hpp"

namespace mwb::io {

using json = nlohmann::json;

inline constexpr const char* generator_name = "mwb enumerate";
inline constexpr const char* generator_version = "1.0.0";

/// Output label of element x: swaps 0 and the identity.
inline Elem out_label(const Monoid& m, Elem x) {
    if (m.identity() == 0) return x;
    return x == 0 ? m.identity() : (x == m.identity() ? 0 : x);
}

inline json to_json(const Monoid& m) {
    auto n = m.normalized();
    return json{{"order", n.order()}, {"identity", n.identity()}, {"table", n.rows()}};
}

inline json to_json(const Hom& h) {
    std::vector<Elem> map(h.dom()->order());
    for (Elem a = 0; a < map.size(); ++a) map[out_label(*h.dom(), a)] = out_label(*h.cod(), h(a));
    return json{{"dom", to_json(*h.dom())}, {"cod", to_json(*h.cod())}, {"map", map}};
}

inline json to_json(const Point& p) { return json{{"f", to_json(p.f())}, {"s", to_json(p.s())}}; }

inline json to_json(const GeneralizedPoint& gp) { return json{{"f", to_json(gp.f())}, {"g", to_json(gp.g())}}; }

/// The whole cone in output labels.
inline json to_json(const PairLimit& lim) {
    const Monoid& obj = *lim.object;
    const Monoid& left = *lim.first.cod();
    const Monoid& right = *lim.second.cod();
    json pairs = json::array();
    std::vector<std::pair<Elem, Elem>> relabeled(lim.pairs.size());
    for (Elem i = 0; i < lim.pairs.size(); ++i)
        relabeled[out_label(obj, i)] = {out_label(left, lim.pairs[i].first), out_label(right, lim.pairs[i].second)};
    for (auto [a, x] : relabeled) pairs.push_back(json::array({a, x}));
    return json{{"object", to_json(obj)}, {"first", to_json(lim.first)}, {"second", to_json(lim.second)}, {"pairs", pairs}};
}

inline json to_json(const PulledBackGP& p) {
    return json{{"original", to_json(p.original)}, {"along", to_json(p.along)},       {"total", to_json(p.total)},
                {"source", to_json(p.source)},     {"g_times_1", to_json(p.g_times_1)}, {"result", to_json(p.result)}};
}

inline json to_json(const CanonicalPoint& c) {
    return json{{"pullback", to_json(c.pullback)}, {"point", to_json(c.point)}};
}

inline json witness_json(const std::vector<Elem>& w) {
    if (w.empty()) return nullptr;
    if (w.size() == 1) return w.front();
    return w;
}

inline json to_json(const CheckResult& r) { return json{{"holds", r.holds}, {"witness", witness_json(r.witness)}}; }

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

inline Elem index(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw ParseError(std::string(what) + ": expected a non-negative integer");
    return j.get<Elem>();
}

}  // namespace detail

inline json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

/// Validates the laws; InvalidMonoid propagates with its witness.
inline Monoid monoid_from_json(const json& j) {
    auto order = detail::index(detail::field(j, "order"), "order");
    auto identity = detail::index(detail::field(j, "identity"), "identity");
    const auto& table = detail::field(j, "table");
    if (!table.is_array()) throw ParseError("table: expected an array of rows");
    std::vector<std::vector<Elem>> rows;
    for (const auto& row : table) {
        if (!row.is_array()) throw ParseError("table: expected an array of rows");
        auto& r = rows.emplace_back();
        for (const auto& v : row) r.push_back(detail::index(v, "table entry"));
    }
    if (rows.size() != order) throw ParseError("table has " + std::to_string(rows.size()) + " rows, order is " + std::to_string(order));
    return Monoid::from_rows(rows, identity);
}

inline MonoidPtr monoid_ref_from_json(const json& j, const std::filesystem::path& base_dir) {
    if (j.is_string()) return share(monoid_from_json(read_json_file(base_dir / j.get<std::string>())));
    return share(monoid_from_json(j));
}

inline Hom hom_from_json(const json& j, const std::filesystem::path& base_dir = {}) {
    auto dom = monoid_ref_from_json(detail::field(j, "dom"), base_dir);
    auto cod = monoid_ref_from_json(detail::field(j, "cod"), base_dir);
    const auto& map = detail::field(j, "map");
    if (!map.is_array()) throw ParseError("map: expected an array");
    std::vector<Elem> m;
    for (const auto& v : map) m.push_back(detail::index(v, "map entry"));
    return Hom::make(std::move(dom), std::move(cod), std::move(m));
}

inline Point point_from_json(const json& j, const std::filesystem::path& base_dir = {}) {
    return Point::make(hom_from_json(detail::field(j, "f"), base_dir), hom_from_json(detail::field(j, "s"), base_dir));
}

inline GeneralizedPoint gp_from_json(const json& j, const std::filesystem::path& base_dir = {}) {
    return GeneralizedPoint::make(hom_from_json(detail::field(j, "f"), base_dir),
                                  hom_from_json(detail::field(j, "g"), base_dir));
}

inline json cache_header(std::size_t order, bool up_to_iso) {
    return json{{"generator", generator_name},
                {"version", generator_version},
                {"params", {{"order", order}, {"up_to_iso", up_to_iso}}}};
}

/// Reads an enumeration cache: header line, then one monoid per line.
inline std::vector<Monoid> read_cache(std::istream& in, json* header = nullptr) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty cache");
    json h;
    try {
        h = json::parse(line);
    } catch (const json::exception& e) {
        throw ParseError(std::string("cache header: ") + e.what());
    }
    if (!h.is_object() || h.value("generator", "") != generator_name) throw ParseError("cache header: unknown generator");
    if (header) *header = h;
    std::vector<Monoid> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            out.push_back(monoid_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw ParseError(std::string("cache line: ") + e.what());
        }
    }
    return out;
}

}  // namespace mwb::io
