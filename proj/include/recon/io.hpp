#pragma once
// JSON forms of graphs, cycles, quivers and translation quivers.
// Rationals are written as "p/q" strings, integers as numbers.

#include <string>

#include <json.hpp>

#include "knitting.hpp"
#include "rules.hpp"

namespace recon {

using json = nlohmann::ordered_json;

class BadInput : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline DualGraph graph_from_json(const json& j)
{
    try {
        DualGraph g;
        for (const auto& v : j.at("vertices"))
            g.add_vertex(v.at("id").get<std::string>(), v.at("self").get<long>());
        if (j.contains("edges"))
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2)
                    throw BadInput("an edge must be a pair of vertex ids");
                g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
            }
        return g;
    } catch (const json::exception& e) {
        throw BadInput(std::string("malformed graph JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw BadInput(std::string("malformed graph JSON: ") + e.what());
    }
}

inline json to_json(const DualGraph& g)
{
    json j;
    j["vertices"] = json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
        j["vertices"].push_back({{"id", g.id(static_cast<int>(i))}, {"self", g.self(static_cast<int>(i))}});
    j["edges"] = json::array();
    for (auto [a, b] : g.edges())
        j["edges"].push_back({g.id(a), g.id(b)});
    return j;
}

inline json to_json(const ValidationReport& r)
{
    return {{"valid", r.valid}, {"problems", r.problems}};
}

inline json cycle_json(const DualGraph& g, const Cycle& z)
{
    json j = json::object();
    for (std::size_t i = 0; i < g.size(); ++i)
        j[g.id(static_cast<int>(i))] = to_long(z[i]);
    return j;
}

inline json cycle_json(const DualGraph& g, const RationalCycle& z)
{
    json j = json::object();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& x = z[i];
        if (boost::multiprecision::denominator(x) == 1)
            j[g.id(static_cast<int>(i))] = to_long(boost::multiprecision::numerator(x));
        else
            j[g.id(static_cast<int>(i))] = to_string(x);
    }
    return j;
}

// Vertices listed star first; arrow keys "a->b", zero counts omitted.
inline json to_json(const ReconQuiver& q)
{
    json j;
    const std::size_t s = q.star();
    std::vector<std::size_t> order{s};
    for (std::size_t i = 0; i < s; ++i)
        order.push_back(i);
    j["vertices"] = json::array();
    for (auto v : order)
        j["vertices"].push_back(q.names[v]);
    j["zf"] = json::object();
    for (std::size_t i = 0; i < s; ++i)
        j["zf"][q.names[i]] = q.zf[i];
    auto counts = [&](const CountMatrix& m) {
        json o = json::object();
        for (auto a : order)
            for (auto b : order)
                if (m[a][b] != 0)
                    o[q.names[a] + "->" + q.names[b]] = m[a][b];
        return o;
    };
    j["arrows"] = counts(q.arrows);
    j["relations"] = counts(q.relations);
    return j;
}

inline std::string quiver_text(const ReconQuiver& q)
{
    std::string out;
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b) {
            if (q.arrows[a][b])
                out += q.names[a] + " -> " + q.names[b] + " : " + std::to_string(q.arrows[a][b]) + "\n";
        }
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b)
            if (q.relations[a][b])
                out += q.names[a] + " ~> " + q.names[b] + " : " + std::to_string(q.relations[a][b]) +
                       " relation(s)\n";
    return out;
}

inline TranslationQuiver translation_quiver_from_json(const json& j)
{
    try {
        TranslationQuiver t;
        for (const auto& v : j.at("vertices"))
            t.ids.push_back(v.get<std::string>());
        for (const auto& a : j.at("arrows"))
            t.arrows.emplace_back(t.index_of(a.at(0).get<std::string>()), t.index_of(a.at(1).get<std::string>()));
        t.tau.assign(t.ids.size(), -1);
        for (const auto& [k, v] : j.at("tau").items())
            t.tau[t.index_of(k)] = t.index_of(v.get<std::string>());
        for (int x : t.tau)
            if (x < 0)
                throw BadInput("tau must be defined on every vertex");
        // the grading is the display column, cyclic with period max+1
        t.display.assign(t.ids.size(), {0, 0});
        t.column.assign(t.ids.size(), 0);
        int maxcol = 0;
        for (const auto& [k, v] : j.at("display").items()) {
            int i = t.index_of(k);
            t.display[i] = {v.at(0).get<int>(), v.at(1).get<int>()};
            t.column[i] = t.display[i].second;
            maxcol = std::max(maxcol, t.column[i]);
        }
        if (j.contains("period"))
            t.period = j.at("period").get<int>();
        else
            t.period = maxcol + 1;
        return t;
    } catch (const json::exception& e) {
        throw BadInput(std::string("malformed translation quiver JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw BadInput(std::string("malformed translation quiver JSON: ") + e.what());
    }
}

inline json to_json(const TranslationQuiver& t)
{
    json j;
    j["vertices"] = t.ids;
    j["arrows"] = json::array();
    for (auto [a, b] : t.arrows)
        j["arrows"].push_back({t.ids[a], t.ids[b]});
    j["tau"] = json::object();
    for (std::size_t v = 0; v < t.size(); ++v)
        j["tau"][t.ids[v]] = t.ids[t.tau[v]];
    j["display"] = json::object();
    for (std::size_t v = 0; v < t.display.size(); ++v)
        j["display"][t.ids[v]] = {t.display[v].first, t.display[v].second};
    j["period"] = t.period;
    return j;
}

inline json rule_trace_json(const DualGraph& g, const RulesResult& r)
{
    auto name = [&](int v) { return v == static_cast<int>(g.size()) ? std::string("star") : g.id(v); };
    json j = json::array();
    for (const auto& s : r.trace)
        j.push_back({{"arrow", name(s.from) + "->" + name(s.to)}, {"count", s.count}, {"clause", s.clause}});
    return j;
}

inline json to_json(const DualGraph& g, const ZfClass& c)
{
    json j;
    j["kind"] = to_string(c.kind);
    if (c.middle_vertex)
        j["middle_vertex"] = g.id(*c.middle_vertex);
    if (c.c_vertex)
        j["c_vertex"] = g.id(*c.c_vertex);
    if (!c.d_subdiagram.empty()) {
        j["d_subdiagram"] = json::array();
        for (int v : c.d_subdiagram)
            j["d_subdiagram"].push_back(g.id(v));
    }
    return j;
}

}  // namespace recon
