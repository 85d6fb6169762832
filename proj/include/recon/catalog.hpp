#pragma once
// Finite small subgroups of GL(2,C): parameters, minimal resolution graphs,
// and the quivers as drawn in the published figures.

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiver.hpp"

namespace recon {

class BadGroup : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GroupId {
    char family = 'A';  // A, D, T, O, I
    long p = 0;         // r, n or m
    long q = 0;         // a or q; unused for T/O/I

    std::string str() const
    {
        std::string s(1, family);
        s += ":" + std::to_string(p);
        if (family == 'A' || family == 'D')
            s += "," + std::to_string(q);
        return s;
    }
};

inline long family_modulus(char family)
{
    switch (family) {
    case 'T': return 6;
    case 'O': return 12;
    case 'I': return 30;
    }
    return 0;
}

inline std::vector<long> family_residues(char family)
{
    switch (family) {
    case 'T': return {1, 3, 5};
    case 'O': return {1, 5, 7, 11};
    case 'I': return {1, 7, 11, 13, 17, 19, 23, 29};
    }
    return {};
}

// Empty when the parameters are admissible, else one message per violation.
inline std::vector<std::string> validate_params(const GroupId& id)
{
    std::vector<std::string> errs;
    switch (id.family) {
    case 'A':
    case 'D': {
        const char* big = id.family == 'A' ? "r" : "n";
        const char* small = id.family == 'A' ? "a" : "q";
        if (!(1 < id.q))
            errs.push_back(std::string("need 1 < ") + small);
        if (!(id.q < id.p))
            errs.push_back(std::string("need ") + small + " < " + big);
        if (id.p > 0 && id.q > 0 && std::gcd(id.p, id.q) != 1)
            errs.push_back(std::string("need gcd(") + big + "," + small + ") = 1");
        break;
    }
    case 'T':
    case 'O':
    case 'I': {
        const long k = family_modulus(id.family);
        auto res = family_residues(id.family);
        if (id.p < 1)
            errs.push_back("need m >= 1");
        else if (std::find(res.begin(), res.end(), id.p % k) == res.end())
            errs.push_back("m mod " + std::to_string(k) + " = " + std::to_string(id.p % k) +
                           " is not an allowed residue");
        break;
    }
    default:
        errs.push_back(std::string("unknown family '") + id.family + "'");
    }
    return errs;
}

inline void require_valid(const GroupId& id)
{
    auto errs = validate_params(id);
    if (errs.empty())
        return;
    std::string msg = "invalid group " + id.str() + ":";
    for (auto& e : errs)
        msg += " " + e + ";";
    throw BadGroup(msg);
}

// "A:5,3", "D:7,4", "T:7", ...
inline GroupId parse_group(const std::string& spec)
{
    GroupId id;
    auto fail = [&] { throw BadGroup("bad group spec '" + spec + "' (expected A:r,a D:n,q T:m O:m I:m)"); };
    if (spec.size() < 3 || spec[1] != ':')
        fail();
    id.family = spec[0];
    if (std::string("ADTOI").find(id.family) == std::string::npos)
        fail();
    std::string rest = spec.substr(2);
    try {
        std::size_t used = 0;
        id.p = std::stol(rest, &used);
        rest = rest.substr(used);
        if (id.family == 'A' || id.family == 'D') {
            if (rest.empty() || rest[0] != ',')
                fail();
            rest = rest.substr(1);
            id.q = std::stol(rest, &used);
            rest = rest.substr(used);
        }
    } catch (const std::logic_error&) {
        fail();
    }
    if (!rest.empty())
        fail();
    return id;
}

// m = k(b-2) + c
inline long family_b(const GroupId& id)
{
    const long k = family_modulus(id.family);
    return (id.p - id.p % k) / k + 2;
}

inline GroupId with_b(GroupId id, long b)
{
    const long k = family_modulus(id.family);
    id.p = k * (b - 2) + id.p % k;
    return id;
}

// r/a = a1 - 1/(a2 - 1/(...)), every a_i >= 2
inline std::vector<long> jh_expand(long r, long a)
{
    if (!(0 < a && a < r) || std::gcd(r, a) != 1)
        throw std::invalid_argument("jh_expand needs 0 < a < r with gcd(r,a) = 1");
    std::vector<long> out;
    while (a > 0) {
        long alpha = (r + a - 1) / a;
        out.push_back(alpha);
        long next = alpha * a - r;
        r = a;
        a = next;
    }
    return out;
}

// Evaluates [a1,...,ak] back to r/a.
inline Rational jh_value(const std::vector<long>& alphas)
{
    if (alphas.empty())
        throw std::invalid_argument("empty continued fraction");
    Rational x = alphas.back();
    for (std::size_t k = alphas.size() - 1; k-- > 0;)
        x = alphas[k] - 1 / x;
    return x;
}

// A chain with at most one extra leaf. The leaf's id is placed right after
// the vertex it hangs from, which is the reading order of the drawings.
struct StarTemplate {
    std::vector<long> chain;  // self-intersections; 0 marks the -b vertex
    int branch_at = -1;
    long leaf = -2;
};

struct CatalogGraph {
    DualGraph graph;
    std::vector<int> chain;          // graph index of each chain position
    std::optional<int> leaf;         // graph index of the leaf
    std::optional<int> centre;       // the -b vertex (T/O/I)
};

inline CatalogGraph build_star(const StarTemplate& t, long b)
{
    CatalogGraph c;
    int next = 1;
    auto name = [&] { return "E" + std::to_string(next++); };
    for (std::size_t k = 0; k < t.chain.size(); ++k) {
        long self = t.chain[k] == 0 ? -b : t.chain[k];
        int v = c.graph.add_vertex(name(), self);
        if (t.chain[k] == 0)
            c.centre = v;
        if (k > 0)
            c.graph.add_edge(c.chain.back(), v);
        c.chain.push_back(v);
        if (static_cast<int>(k) == t.branch_at) {
            int l = c.graph.add_vertex(name(), t.leaf);
            c.graph.add_edge(v, l);
            c.leaf = l;
        }
    }
    return c;
}

namespace detail {

struct ResidueShape {
    char family;
    long residue;
    StarTemplate shape;
};

// Shapes of the T/O/I minimal resolutions, read off the drawn dual graphs;
// 0 is the vertex labelled -b. The base case m = residue is b = 2.
inline const std::vector<ResidueShape>& residue_shapes()
{
    static const std::vector<ResidueShape> table = {
        {'T', 1, {{-2, -2, 0, -2, -2}, 2}},
        {'T', 3, {{-3, 0, -2, -2}, 1}},
        {'T', 5, {{-3, 0, -3}, 1}},
        {'O', 1, {{-2, -2, 0, -2, -2, -2}, 2}},
        {'O', 5, {{-3, 0, -2, -2, -2}, 1}},
        {'O', 7, {{-4, 0, -2, -2}, 1}},
        {'O', 11, {{-3, 0, -4}, 1}},
        {'I', 1, {{-2, -2, 0, -2, -2, -2, -2}, 2}},
        {'I', 7, {{-2, -2, 0, -2, -3}, 2}},
        {'I', 11, {{-3, 0, -2, -2, -2, -2}, 1}},
        {'I', 13, {{-2, -2, 0, -3, -2}, 2}},
        {'I', 17, {{-3, 0, -2, -3}, 1}},
        {'I', 19, {{-5, 0, -2, -2}, 1}},
        {'I', 23, {{-3, 0, -3, -2}, 1}},
        {'I', 29, {{-3, 0, -5}, 1}},
    };
    return table;
}

}  // namespace detail

inline StarTemplate group_template(const GroupId& id)
{
    require_valid(id);
    StarTemplate t;
    if (id.family == 'A') {
        for (long a : jh_expand(id.p, id.q))
            t.chain.push_back(-a);
        return t;
    }
    if (id.family == 'D') {
        t.chain.push_back(-2);
        for (long a : jh_expand(id.p, id.q))
            t.chain.push_back(-a);
        t.branch_at = 1;
        return t;
    }
    const long c = id.p % family_modulus(id.family);
    for (const auto& r : detail::residue_shapes())
        if (r.family == id.family && r.residue == c)
            return r.shape;
    throw std::logic_error("no residue shape for " + id.str());
}

inline CatalogGraph catalog_graph(const GroupId& id)
{
    const long b = (id.family == 'A' || id.family == 'D') ? 2 : family_b(id);
    return build_star(group_template(id), b);
}

inline DualGraph dual_graph(const GroupId& id) { return catalog_graph(id).graph; }

// Every group in the sweep ranges used by the tests and `sweep`.
inline std::vector<GroupId> catalog_ids(long max_r, long max_n, long b_lo, long b_hi, bool with_base)
{
    std::vector<GroupId> ids;
    for (long r = 3; r <= max_r; ++r)
        for (long a = 2; a < r; ++a)
            if (std::gcd(r, a) == 1)
                ids.push_back({'A', r, a});
    for (long n = 3; n <= max_n; ++n)
        for (long q = 2; q < n; ++q)
            if (std::gcd(n, q) == 1)
                ids.push_back({'D', n, q});
    for (char f : {'T', 'O', 'I'}) {
        const long k = family_modulus(f);
        for (long c : family_residues(f)) {
            if (with_base)
                ids.push_back({f, c, 0});
            for (long b = b_lo; b <= b_hi; ++b)
                ids.push_back({f, k * (b - 2) + c, 0});
        }
    }
    return ids;
}

// ---- the drawn quivers ---------------------------------------------------
//
// Each figure is written in its own vertex labels. Every figure draws the
// dual graph doubled, so only the arrows touching the star are listed:
//   "3=R"    a pair of arrows 3 -> R and R -> 3
//   "1>R:2"  two further arrows 1 -> R (the green ones); ":1" may be omitted
//   "b=R"    the pair between R and the leaf ("1b"/"3b" in the drawing)
//   "c"      the b-3 arrows from the -b vertex to R
// Chain labels count from 1, except in the I_{30(b-2)+1} drawings where
// they count from 0.

struct FigureQuiver {
    const char* group;  // "A:5,3" etc, or "T:1" / "T:b" for the residue families
    const char* arrows;
    int first_label = 1;
};

inline const std::vector<FigureQuiver>& drawn_quivers()
{
    static const std::vector<FigureQuiver> table = {
        {"A:5,3", "1=R 2=R 2>R"},               // triangle, one green arrow
        {"A:40,11", "1=R 3=R 1>R:2 2>R 3>R:2"}, // square, five green arrows
        {"D:52,11", "1=R 4=R b=R 2>R:2 3>R:2 4>R"},
        {"D:56,39", "3=R 6=R 4>R:2 6>R"},
        {"D:7,4", "2=R 3>R:2"},
        {"D:7,5", "3=R 4>R"},
        {"T:1", "b=R"},
        {"T:b1", "1=R 5=R b=R c"},
        {"T:3", "3=R 1>R"},
        {"T:b3", "1=R 1>R 4=R b=R c"},
        {"T:5", "2=R 1>R 3>R"},
        {"T:b5", "1=R 1>R 3=R 3>R b=R c"},
        {"O:1", "1=R"},
        {"O:b1", "1=R 6=R b=R c"},
        {"O:5", "4=R 1>R"},
        {"O:b5", "1=R 1>R 5=R b=R c"},
        {"O:7", "3=R 1>R:2"},
        {"O:b7", "1=R 1>R:2 4=R b=R c"},
        {"O:11", "2=R 1>R 3>R:2"},
        {"O:b11", "1=R 1>R 3=R 3>R:2 b=R c"},
        {"I:1", "6=R", 0},
        {"I:b1", "0=R 6=R b=R c", 0},
        {"I:7", "b=R 5>R"},
        {"I:b7", "1=R 5=R 5>R b=R c"},
        {"I:11", "5=R 1>R"},
        {"I:b11", "1=R 1>R 6=R b=R c"},
        {"I:13", "2=R 5=R"},
        {"I:b13", "1=R 5=R 4>R b=R c"},
        {"I:17", "3=R 1>R 4>R"},
        {"I:b17", "1=R 1>R 4=R 4>R b=R c"},
        {"I:19", "3=R 1>R:3"},
        {"I:b19", "1=R 1>R:3 4=R b=R c"},
        {"I:23", "2=R 1>R 4=R"},
        {"I:b23", "1=R 1>R 4=R 3>R b=R c"},
        {"I:29", "2=R 1>R 3>R:3"},
        {"I:b29", "1=R 1>R 3=R 3>R:3 b=R c"},
    };
    return table;
}

inline std::optional<FigureQuiver> figure_for(const GroupId& id)
{
    std::string key;
    if (id.family == 'A' || id.family == 'D') {
        key = id.str();
    } else {
        const long c = id.p % family_modulus(id.family);
        key = std::string(1, id.family) + ":" + (family_b(id) == 2 ? "" : "b") + std::to_string(c);
    }
    for (const auto& f : drawn_quivers())
        if (key == f.group)
            return f;
    return std::nullopt;
}

// Arrow counts of the drawing for `id` (relations left at zero).
inline ReconQuiver expected_quiver(const GroupId& id)
{
    require_valid(id);
    auto fig = figure_for(id);
    if (!fig)
        throw BadGroup("no drawn quiver for " + id.str());
    const auto cg = catalog_graph(id);
    const auto& g = cg.graph;
    ReconQuiver q = ReconQuiver::empty_like(g);
    const int star = static_cast<int>(g.size());
    for (auto [a, b] : g.edges()) {
        q.arrows[a][b] += 1;
        q.arrows[b][a] += 1;
    }
    auto vertex = [&](const std::string& label) {
        if (label == "b") {
            if (!cg.leaf)
                throw std::logic_error("figure names a leaf the graph lacks");
            return *cg.leaf;
        }
        int k = std::stoi(label) - fig->first_label;
        return cg.chain.at(k);
    };
    std::istringstream in(fig->arrows);
    std::string tok;
    while (in >> tok) {
        if (tok == "c") {
            q.arrows[*cg.centre][star] += family_b(id) - 3;
            continue;
        }
        auto eq = tok.find("=R");
        if (eq != std::string::npos) {
            int v = vertex(tok.substr(0, eq));
            q.arrows[v][star] += 1;
            q.arrows[star][v] += 1;
            continue;
        }
        auto gt = tok.find(">R");
        if (gt == std::string::npos)
            throw std::logic_error("bad figure token " + tok);
        long k = 1;
        if (gt + 2 < tok.size())
            k = std::stol(tok.substr(gt + 3));
        q.arrows[vertex(tok.substr(0, gt))][star] += k;
    }
    return q;
}

}  // namespace recon
