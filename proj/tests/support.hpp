#pragma once
// Test-side oracles. These deliberately avoid the library's own algorithms:
// determinants by cofactor expansion, linear solves by Cramer's rule,
// fundamental cycles by exhaustive search.

#include <functional>
#include <string>
#include <vector>

#include <recon/knitting.hpp>

#include "printed_grids.hpp"

namespace oracle {

using recon::DualGraph;
using recon::Int;
using recon::Rational;

// chain of labels, optional leaf hanging off chain[branch_at]; ids in
// reading order like the drawings (leaf right after its chain vertex)
inline DualGraph star_graph(const std::vector<long>& chain, int branch_at = -1, long leaf = -2)
{
    return recon::build_star({chain, branch_at, leaf}, 2).graph;
}

inline Int det(const std::vector<std::vector<Int>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0)
            continue;
        std::vector<std::vector<Int>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Int term = m[0][j] * det(minor);
        s += (j % 2 == 0) ? term : Int(-term);
    }
    return s;
}

inline std::vector<std::vector<Int>> int_matrix(const DualGraph& g)
{
    std::vector<std::vector<Int>> m(g.size(), std::vector<Int>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            m[i][j] = g.meet(static_cast<int>(i), static_cast<int>(j));
    return m;
}

inline bool negative_definite(const DualGraph& g)
{
    auto m = int_matrix(g);
    for (std::size_t k = 1; k <= m.size(); ++k) {
        std::vector<std::vector<Int>> lead(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                lead[i][j] = m[i][j];
        Int d = det(lead);
        if ((k % 2 == 1 && d >= 0) || (k % 2 == 0 && d <= 0))
            return false;
    }
    return true;
}

// Z_K by Cramer's rule
inline std::vector<Rational> canonical_cycle(const DualGraph& g)
{
    auto m = int_matrix(g);
    const Int d = det(m);
    std::vector<Rational> z;
    for (std::size_t j = 0; j < g.size(); ++j) {
        auto mj = m;
        for (std::size_t i = 0; i < g.size(); ++i)
            mj[i][j] = g.self(static_cast<int>(i)) + 2;
        z.push_back(Rational(det(mj)) / Rational(d));
    }
    return z;
}

inline Int pair_with(const DualGraph& g, const std::vector<Int>& z, int i)
{
    Int s = 0;
    for (std::size_t j = 0; j < g.size(); ++j)
        s += z[j] * g.meet(i, static_cast<int>(j));
    return s;
}

inline bool anti_nef(const DualGraph& g, const std::vector<Int>& z)
{
    for (std::size_t i = 0; i < g.size(); ++i)
        if (pair_with(g, z, static_cast<int>(i)) > 0)
            return false;
    return true;
}

// Smallest anti-nef cycle with all coefficients >= 1, searched over every
// vector with entries up to `cap`; minimum in the componentwise order.
inline std::vector<Int> brute_fundamental_cycle(const DualGraph& g, int cap)
{
    const std::size_t n = g.size();
    std::vector<std::vector<Int>> hits;
    std::vector<Int> z(n, 1);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == n) {
            if (anti_nef(g, z))
                hits.push_back(z);
            return;
        }
        for (int v = 1; v <= cap; ++v) {
            z[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    for (const auto& h : hits) {
        bool below_all = true;
        for (const auto& o : hits)
            for (std::size_t i = 0; i < n; ++i)
                if (h[i] > o[i])
                    below_all = false;
        if (below_all)
            return h;
    }
    return {};
}

// r/a from [a1..ak] via the matrix product prod [[a_i, -1], [1, 0]], taken
// from the right so the second column holds a rather than its inverse mod r
inline std::pair<long, long> continued_fraction(const std::vector<long>& alphas)
{
    long p0 = 1, p1 = 0;
    for (auto it = alphas.rbegin(); it != alphas.rend(); ++it) {
        long np = *it * p0 - p1;
        p1 = p0;
        p0 = np;
    }
    return {p0, p1};
}

// ---- printed grid comparison ----------------------------------------------

struct GridDiff {
    std::vector<std::string> values;    // printed number differs from computed
    std::vector<std::string> dots;      // printed "." where the front has arrived
    std::vector<std::string> circles;   // circling differs from special membership
    std::vector<std::string> unprinted; // nonzero computed value with no printed cell
    std::vector<std::string> layout;    // printed cell where no vertex sits
};

inline std::vector<std::string> tokens(std::string_view row)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : row) {
        if (ch == ' ') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

inline GridDiff compare_printed(const fixtures::PrintedGrid& p, const recon::KnitGrid& g)
{
    GridDiff d;
    int g0 = -1;
    for (int r = 0; r < 8 && g0 < 0; ++r) {
        auto t = tokens(p.rows[r]);
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i].rfind("((", 0) == 0)
                g0 = static_cast<int>(i);
    }
    const char* names = "ABCDEFGH";
    auto where = [&](int r, int k) { return std::string(1, names[r]) + "@" + std::to_string(k); };
    std::vector<std::vector<bool>> printed(8, std::vector<bool>(g.cells[0].size(), false));
    for (int r = 0; r < 8; ++r) {
        auto t = tokens(p.rows[r]);
        for (std::size_t i = 0; i < t.size(); ++i) {
            const std::string& tok = t[i];
            if (tok == "_")
                continue;
            const int k = static_cast<int>(i) - g0;
            if (k < 0) {
                if (tok != ".")
                    d.layout.push_back(where(r, k));
                continue;
            }
            if (k >= static_cast<int>(g.cells[r].size())) {
                // beyond the last (zero) layer everything is zero
                if (tok != "." && tok.find_first_not_of("()0") != std::string::npos)
                    d.values.push_back(where(r, k));
                continue;
            }
            const auto& c = g.cells[r][k];
            if (!c.present) {
                d.layout.push_back(where(r, k));
                continue;
            }
            printed[r][k] = true;
            if (tok == ".") {
                if (c.reached)
                    d.dots.push_back(where(r, k));
                continue;
            }
            bool circled = tok[0] == '(';
            std::string digits = tok.substr(tok.find_first_not_of('('));
            digits = digits.substr(0, digits.find(')'));
            if (std::stoll(digits) != c.value)
                d.values.push_back(where(r, k) + " printed " + digits + " computed " + std::to_string(c.value));
            if (circled != c.special)
                d.circles.push_back(where(r, k));
        }
    }
    for (int r = 0; r < 8; ++r)
        for (std::size_t k = 0; k < g.cells[r].size(); ++k)
            if (g.cells[r][k].present && g.cells[r][k].value != 0 && !printed[r][k])
                d.unprinted.push_back(where(r, static_cast<int>(k)));
    return d;
}

}  // namespace oracle
