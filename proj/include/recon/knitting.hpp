#pragma once
// Counting irreducible maps between special CM modules by knitting on the
// AR quiver (a stable translation quiver).

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catalog.hpp"

namespace recon {

struct TranslationQuiver {
    std::vector<std::string> ids;
    std::vector<std::pair<int, int>> arrows;  // multiset
    std::vector<int> tau;
    std::vector<int> column;  // grading
    int period = 1;
    std::vector<std::pair<int, int>> display;  // (row, column); optional

    int index_of(const std::string& id) const
    {
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (ids[i] == id)
                return static_cast<int>(i);
        throw std::invalid_argument("unknown vertex '" + id + "'");
    }
    std::size_t size() const { return ids.size(); }
};

// Problems found, empty if the quiver is a usable stable translation quiver.
inline std::vector<std::string> check_translation_quiver(const TranslationQuiver& t)
{
    std::vector<std::string> errs;
    const std::size_t n = t.size();
    if (t.tau.size() != n || t.column.size() != n) {
        errs.push_back("tau and grading must cover every vertex");
        return errs;
    }
    std::vector<int> hit(n, 0);
    for (int v : t.tau) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
            errs.push_back("tau leaves the vertex set");
            return errs;
        }
        hit[v]++;
    }
    for (int h : hit)
        if (h != 1) {
            errs.push_back("tau is not a bijection");
            break;
        }
    for (auto [a, b] : t.arrows)
        if (((t.column[a] + 1) % t.period + t.period) % t.period != ((t.column[b] % t.period) + t.period) % t.period) {
            errs.push_back("arrow " + t.ids[a] + "->" + t.ids[b] + " does not step the grading by one");
            break;
        }
    // arrows L -> V must match arrows tau(V) -> L
    std::map<std::pair<int, int>, int> count;
    for (auto [a, b] : t.arrows)
        count[{a, b}]++;
    for (auto [key, k] : count) {
        auto [l, v] = key;
        auto it = count.find({t.tau[v], l});
        if (it == count.end() || it->second != k) {
            errs.push_back("mesh at " + t.ids[v] + " is not balanced against tau");
            break;
        }
    }
    return errs;
}

class KnitNonTermination : public std::runtime_error {
public:
    KnitNonTermination(const std::string& why, std::vector<std::vector<long long>> partial)
        : std::runtime_error(why), lambda(std::move(partial)) {}
    std::vector<std::vector<long long>> lambda;
};

struct KnitResult {
    int start = 0;
    std::vector<bool> special;
    std::vector<std::vector<long long>> lambda;  // lambda[n][v], ending at the first zero layer
    std::vector<long long> totals;               // sum over n >= 1
};

inline std::size_t default_max_steps(const TranslationQuiver& t) { return 64 * t.size(); }

inline KnitResult knit_counts(const TranslationQuiver& t, const std::vector<int>& specials, int start,
                              std::size_t max_steps)
{
    auto errs = check_translation_quiver(t);
    if (!errs.empty())
        throw std::invalid_argument("knit: " + errs.front());
    const std::size_t n = t.size();
    KnitResult r;
    r.start = start;
    r.special.assign(n, false);
    for (int s : specials)
        r.special.at(s) = true;
    if (!r.special.at(start))
        throw std::invalid_argument("knit: the start vertex must be special");

    std::vector<std::vector<int>> preds(n);
    for (auto [a, b] : t.arrows)
        preds[b].push_back(a);

    auto mu_of = [&](const std::vector<long long>& lam) {
        std::vector<long long> mu = lam;
        for (std::size_t v = 0; v < n; ++v)
            if (r.special[v])
                mu[v] = 0;
        return mu;
    };

    std::vector<long long> l0(n, 0);
    l0[start] = 1;
    std::vector<long long> l1(n, 0);
    for (auto [a, b] : t.arrows)
        if (a == start)
            l1[b] += 1;
    r.lambda = {l0, l1};
    std::vector<std::vector<long long>> mu = {l0, mu_of(l1)};

    auto zero = [](const std::vector<long long>& v) {
        return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
    };
    auto next_layer = [&](std::size_t k) {
        std::vector<long long> l(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
            long long s = 0;
            for (int p : preds[v])
                if (__builtin_add_overflow(s, mu[k - 1][p], &s))
                    throw KnitNonTermination("knit: counts overflowed", r.lambda);
            s -= mu[k - 2][t.tau[v]];
            l[v] = s > 0 ? s : 0;
        }
        return l;
    };

    while (!zero(r.lambda.back())) {
        const std::size_t k = r.lambda.size();
        if (k > max_steps)
            throw KnitNonTermination("knit: no zero layer within " + std::to_string(max_steps) + " steps",
                                     r.lambda);
        r.lambda.push_back(next_layer(k));
        mu.push_back(mu_of(r.lambda.back()));
    }
    // a zero layer is terminal; confirm on the next two
    for (int extra = 0; extra < 2; ++extra) {
        const std::size_t k = mu.size();
        auto l = next_layer(k);
        if (!zero(l))
            throw std::logic_error("knit: nonzero layer after a zero layer");
        mu.push_back(mu_of(l));
    }

    r.totals.assign(n, 0);
    for (std::size_t k = 1; k < r.lambda.size(); ++k)
        for (std::size_t v = 0; v < n; ++v)
            r.totals[v] += r.lambda[k][v];
    return r;
}

struct GridCell {
    bool present = false;  // a vertex sits here
    bool reached = false;  // on the step-n front
    bool special = false;
    bool start = false;
    long long value = 0;
};

// grid[row][n]: step n lives in display column start_col + n (mod period)
struct KnitGrid {
    int rows = 0;
    std::vector<std::vector<GridCell>> cells;

    std::string text() const
    {
        std::ostringstream o;
        for (const auto& row : cells) {
            std::string line;
            for (const auto& c : row) {
                std::string s;
                if (!c.present)
                    s = "";
                else if (!c.reached)
                    s = ".";
                else if (c.start)
                    s = "((" + std::to_string(c.value) + "))";
                else if (c.special)
                    s = "(" + std::to_string(c.value) + ")";
                else
                    s = std::to_string(c.value);
                line += std::string(s.size() < 6 ? 6 - s.size() : 1, ' ') + s;
            }
            while (!line.empty() && line.back() == ' ')
                line.pop_back();
            o << line << "\n";
        }
        return o.str();
    }
};

inline KnitGrid grid_trace(const TranslationQuiver& t, const KnitResult& r)
{
    if (t.display.size() != t.size())
        throw std::invalid_argument("grid_trace needs display coordinates");
    const std::size_t n = t.size();
    int rows = 0;
    std::map<std::pair<int, int>, int> at;
    for (std::size_t v = 0; v < n; ++v) {
        rows = std::max(rows, t.display[v].first + 1);
        at[{t.display[v].first, ((t.display[v].second % t.period) + t.period) % t.period}] = static_cast<int>(v);
    }
    const int c0 = t.display[r.start].second;
    const std::size_t steps = r.lambda.size();

    std::vector<bool> reached(n, false);
    reached[r.start] = true;
    KnitGrid g;
    g.rows = rows;
    g.cells.assign(rows, std::vector<GridCell>(steps));
    for (std::size_t k = 0; k < steps; ++k) {
        if (k > 0) {
            std::vector<bool> next(n, false);
            for (auto [a, b] : t.arrows)
                if (reached[a])
                    next[b] = true;
            reached = next;
        }
        const int col = static_cast<int>((c0 + static_cast<long>(k)) % t.period);
        for (int row = 0; row < rows; ++row) {
            auto it = at.find({row, col});
            if (it == at.end())
                continue;
            const int v = it->second;
            auto& c = g.cells[row][k];
            c.present = true;
            c.reached = reached[v];
            c.special = r.special[v];
            c.start = (k == 0 && v == r.start);
            c.value = r.lambda[k][v];
        }
    }
    return g;
}

// ---- the AR quiver of the I-type groups -----------------------------------
//
// Rows A..H top to bottom. One copy of E~8 spans two columns: even columns
// carry B C D F H, odd columns A C E G; the centre of E~8 is C in the odd
// column. tau moves one copy (two columns) to the left.

struct NamedSpecials {
    std::vector<std::pair<std::string, int>> names;     // special name -> AR vertex
    std::map<std::string, std::string> graph_vertex;   // special name -> dual graph id ("star" for R)

    int at(const std::string& name) const
    {
        for (auto& [k, v] : names)
            if (k == name)
                return v;
        throw std::invalid_argument("no special named '" + name + "'");
    }
    std::vector<int> vertices() const
    {
        std::vector<int> out;
        for (auto& kv : names)
            out.push_back(kv.second);
        return out;
    }
};

struct IArQuiver {
    TranslationQuiver quiver;
    std::optional<NamedSpecials> specials;
};

namespace detail {
constexpr const char* kRows = "ABCDEFGH";

inline bool row_in_column(int row, int col)
{
    static const int even[] = {1, 2, 3, 5, 7}, odd[] = {0, 2, 4, 6};
    if (col % 2 == 0)
        return std::find(std::begin(even), std::end(even), row) != std::end(even);
    return std::find(std::begin(odd), std::end(odd), row) != std::end(odd);
}

// targets in the next column
inline std::vector<int> row_successors(int row, int col)
{
    if (col % 2 == 0) {
        switch (row) {
        case 1: return {0, 2};
        case 2: return {2};
        case 3: return {2, 4};
        case 5: return {4, 6};
        case 7: return {6};
        }
    } else {
        switch (row) {
        case 0: return {1};
        case 2: return {1, 2, 3};
        case 4: return {3, 5};
        case 6: return {5, 7};
        }
    }
    return {};
}
}  // namespace detail

inline std::string ar_vertex_id(int row, int col)
{
    return std::string(1, detail::kRows[row]) + std::to_string(col);
}

inline IArQuiver build_I_ar_quiver(long m)
{
    require_valid(GroupId{'I', m, 0});
    const int period = static_cast<int>(2 * m);
    IArQuiver out;
    auto& t = out.quiver;
    t.period = period;
    std::map<std::pair<int, int>, int> at;
    for (int col = 0; col < period; ++col)
        for (int row = 0; row < 8; ++row)
            if (detail::row_in_column(row, col)) {
                at[{row, col}] = static_cast<int>(t.ids.size());
                t.ids.push_back(ar_vertex_id(row, col));
                t.column.push_back(col);
                t.display.emplace_back(row, col);
            }
    for (int col = 0; col < period; ++col)
        for (int row = 0; row < 8; ++row)
            if (detail::row_in_column(row, col))
                for (int r2 : detail::row_successors(row, col))
                    t.arrows.emplace_back(at[{row, col}], at[{r2, (col + 1) % period}]);
    t.tau.resize(t.ids.size());
    for (std::size_t v = 0; v < t.ids.size(); ++v)
        t.tau[v] = at[{t.display[v].first, (t.display[v].second - 2 + period) % period}];

    // tau^{-k} R, R the bottom vertex of column 0
    auto shift = [&](int row, int copies) { return at[{row, (2 * copies) % period}]; };
    NamedSpecials s;
    if (m % 30 == 1) {
        s.names = {{"R", shift(7, 0)},  {"A1", shift(7, 6)},  {"A2", shift(7, 12)}, {"A3", shift(7, 18)},
                   {"A4", shift(7, 24)}, {"B1", shift(7, 10)}, {"B2", shift(7, 20)}, {"C", shift(7, 15)},
                   {"M", shift(7, 30)}};
        // the graph chain B1-B2-M-A4-A3-A2-A1 with C on M
        s.graph_vertex = {{"R", "star"}, {"B1", "E1"}, {"B2", "E2"}, {"M", "E3"}, {"C", "E4"},
                          {"A4", "E5"},  {"A3", "E6"}, {"A2", "E7"}, {"A1", "E8"}};
        out.specials = s;
    } else if (m == 7) {
        // positions as drawn for I_7
        s.names = {{"R", at[{7, 0}]},   {"X", at[{6, 1}]},   {"Y1", at[{7, 6}]}, {"N", at[{2, 6}]},
                   {"Z2", at[{6, 11}]}, {"Z1", at[{7, 12}]}, {"Y2", at[{0, 13}]}};
        // the graph chain Y1-Y2-N-Z2-Z1 with X on N
        s.graph_vertex = {{"R", "star"}, {"Y1", "E1"}, {"Y2", "E2"}, {"N", "E3"},
                          {"X", "E4"},   {"Z2", "E5"}, {"Z1", "E6"}};
        out.specials = s;
    }
    return out;
}

struct CrossCheck {
    bool ok = true;
    std::vector<std::string> mismatches;
};

// Knit from every special and compare with the geometric quiver's arrows.
inline CrossCheck cross_check(const GroupId& id)
{
    if (id.family != 'I')
        throw BadGroup("cross_check is only available for the I family");
    auto ar = build_I_ar_quiver(id.p);
    if (!ar.specials)
        throw BadGroup("special positions for " + id.str() + " are not known");
    const auto& sp = *ar.specials;
    const auto g = dual_graph(id);
    const auto q = build_quiver(g);
    auto qindex = [&](const std::string& name) {
        const auto& gid = sp.graph_vertex.at(name);
        return gid == "star" ? static_cast<int>(g.size()) : g.index_of(gid);
    };
    CrossCheck out;
    const auto verts = sp.vertices();
    for (const auto& [from, v] : sp.names) {
        auto r = knit_counts(ar.quiver, verts, v, default_max_steps(ar.quiver));
        for (const auto& [to, w] : sp.names) {
            long long knitted = r.totals[w];
            long geometric = q.arrows[qindex(from)][qindex(to)];
            if (knitted != geometric) {
                out.ok = false;
                out.mismatches.push_back(from + "->" + to + ": knitted " + std::to_string(knitted) +
                                         ", geometric " + std::to_string(geometric));
            }
        }
    }
    return out;
}

}  // namespace recon
