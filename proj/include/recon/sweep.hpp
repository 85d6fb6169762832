#pragma once
// Catalog-wide consistency checks. Each returns the failing cases.

#include <string>
#include <vector>

#include "knitting.hpp"
#include "rules.hpp"

namespace recon {

struct SweepRange {
    long max_r = 60;
    long max_n = 60;
    long b_lo = 3;
    long b_hi = 6;
};

inline std::vector<std::string> check_figures(long b_lo, long b_hi)
{
    std::vector<std::string> bad;
    std::vector<GroupId> ids;
    for (const auto& f : drawn_quivers()) {
        std::string key = f.group;
        if (key[2] == 'b') {
            for (long b = b_lo; b <= b_hi; ++b)
                ids.push_back(with_b(GroupId{key[0], std::stol(key.substr(3)), 0}, b));
        } else {
            ids.push_back(parse_group(key));
        }
    }
    for (const auto& id : ids)
        if (build_quiver(dual_graph(id)).arrows != expected_quiver(id).arrows)
            bad.push_back(id.str());
    return bad;
}

inline std::vector<std::string> check_rules(const SweepRange& r)
{
    std::vector<std::string> bad;
    for (const auto& id : catalog_ids(r.max_r, r.max_n, r.b_lo, r.b_hi, true)) {
        try {
            if (!verify_against_geometric(dual_graph(id)))
                bad.push_back(id.str());
        } catch (const std::exception& e) {
            bad.push_back(id.str() + " (" + e.what() + ")");
        }
    }
    return bad;
}

inline std::vector<std::string> check_dimensions(const SweepRange& r)
{
    std::vector<std::string> bad;
    for (const auto& id : catalog_ids(r.max_r, r.max_n, r.b_lo, r.b_hi, true)) {
        const auto g = dual_graph(id);
        bool gorenstein = true;
        for (std::size_t i = 0; i < g.size(); ++i)
            gorenstein = gorenstein && g.self(static_cast<int>(i)) == -2;
        const auto p = projective_dimensions(g);
        const auto from_ext = projective_dimensions_from_ext(ext_table(g));
        // Gorenstein: all 2. Otherwise right is 2 but 3 at the star, left is
        // 3 on the curves below -2.
        std::vector<int> left(g.size() + 1, 2), right(g.size() + 1, 2);
        if (!gorenstein) {
            right.back() = 3;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (g.self(static_cast<int>(i)) < -2)
                    left[i] = 3;
        }
        if (global_dimension(g) != (gorenstein ? 2 : 3) || p.left != from_ext.left || p.right != from_ext.right ||
            p.left != left || p.right != right)
            bad.push_back(id.str());
    }
    return bad;
}

inline std::vector<std::string> check_euler(const SweepRange& r)
{
    std::vector<std::string> bad;
    for (const auto& id : catalog_ids(r.max_r, r.max_n, r.b_lo, r.b_hi, true)) {
        const auto g = dual_graph(id);
        const auto t = ext_table(g);
        const auto z = fundamental_cycle(g);
        const int s = static_cast<int>(g.size());
        for (int i = 0; i < s; ++i) {
            if (g.self(i) == -1)
                continue;
            long alt = t.at(1, i, s) - t.at(2, i, s) + t.at(3, i, s);
            if (Int(alt) != -curve_pairing(g, z, i)) {
                bad.push_back(id.str() + " at " + g.id(i));
                break;
            }
        }
    }
    return bad;
}

// b -> b+1 adds exactly one arrow from the -b vertex to the star.
inline std::vector<std::string> check_b_step(long b_lo, long b_hi)
{
    std::vector<std::string> bad;
    for (char f : {'T', 'O', 'I'})
        for (long c : family_residues(f))
            for (long b = b_lo; b < b_hi + 1; ++b) {
                GroupId lo = with_b(GroupId{f, c, 0}, b), hi = with_b(GroupId{f, c, 0}, b + 1);
                auto cg = catalog_graph(lo);
                auto d = build_quiver(dual_graph(hi)).arrows;
                const auto base = build_quiver(cg.graph).arrows;
                const std::size_t s = cg.graph.size();
                d[*cg.centre][s] -= 1;
                if (d != base)
                    bad.push_back(lo.str() + " -> " + hi.str());
            }
    return bad;
}

// The D family analogue: raising the last label by one.
inline std::vector<std::string> check_d_step(long max_n)
{
    std::vector<std::string> bad;
    for (long n = 3; n <= max_n; ++n)
        for (long q = 2; q < n; ++q) {
            if (std::gcd(n, q) != 1)
                continue;
            auto cg = catalog_graph({'D', n, q});
            const int last = cg.chain.back();
            if (cg.graph.self(last) == -2)
                continue;  // lowering past -2 changes Z_f
            auto selfs = std::vector<long>();
            for (std::size_t i = 0; i < cg.graph.size(); ++i)
                selfs.push_back(cg.graph.self(static_cast<int>(i)));
            selfs[last] -= 1;
            auto bigger = cg.graph.relabelled(selfs);
            if (fundamental_cycle(bigger) != fundamental_cycle(cg.graph))
                continue;
            auto d = build_quiver(bigger).arrows;
            d[last][cg.graph.size()] -= 1;
            if (d != build_quiver(cg.graph).arrows)
                bad.push_back("D:" + std::to_string(n) + "," + std::to_string(q));
        }
    return bad;
}

inline std::vector<std::string> check_knitting(const std::vector<long>& ms)
{
    std::vector<std::string> bad;
    for (long m : ms) {
        auto c = cross_check({'I', m, 0});
        if (!c.ok)
            bad.push_back("I:" + std::to_string(m) + " " + c.mismatches.front());
    }
    return bad;
}

}  // namespace recon
