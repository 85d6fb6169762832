#pragma once
// Ext dimensions between the simples of the reconstruction algebra and the
// quiver they determine. Vertex n (== graph size) stands for the star.

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dual_graph.hpp"

namespace recon {

inline Rational plus_part(const Rational& a) { return a > 0 ? a : Rational(0); }
inline Rational minus_part(const Rational& a) { return a < 0 ? Rational(-a) : Rational(0); }

using CountMatrix = std::vector<std::vector<long>>;

struct ExtTable {
    std::size_t curves = 0;
    std::array<CountMatrix, 3> dims;  // dims[t-1][source][target]

    std::size_t star() const { return curves; }
    long at(int t, int source, int target) const { return dims.at(t - 1).at(source).at(target); }
};

namespace detail {
inline long count(const Rational& a, const char* what)
{
    return to_long(as_integer(a, what));
}
}  // namespace detail

inline ExtTable ext_table(const DualGraph& g)
{
    const auto z = fundamental_cycle(g);
    const auto k = canonical_cycle(g);
    const int n = static_cast<int>(g.size());
    const int s = n;
    ExtTable t;
    t.curves = g.size();
    for (auto& d : t.dims)
        d.assign(n + 1, std::vector<long>(n + 1, 0));

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long m = g.meet(i, j);
            t.dims[0][i][j] = std::max(m, 0L);
            t.dims[1][i][j] = std::max(-1 - m, 0L);
        }

    const long zz = detail::count(pairing(g, z, z), "Z_f.Z_f");
    t.dims[1][s][s] = -1 - zz;  // e - 2

    RationalCycle diff(n);
    for (int i = 0; i < n; ++i)
        diff[i] = k[i] - Rational(z[i]);

    for (int i = 0; i < n; ++i) {
        const long zi = to_long(curve_pairing(g, z, i));
        t.dims[0][s][i] = -zi;
        if (g.self(i) == -1) {
            t.dims[0][i][s] = 1 - zi;
            t.dims[1][i][s] = 1;
        } else {
            // integral by construction (Z_K.E_i = E_i^2+2), checked anyway
            Rational d = pairing_with_curve(g, diff, i);
            t.dims[0][i][s] = detail::count(plus_part(d), "(Z_K-Z_f).E_i");
            t.dims[1][i][s] = detail::count(minus_part(d), "(Z_K-Z_f).E_i");
            t.dims[2][i][s] = -g.self(i) - 2;
        }
    }
    return t;
}

struct ReconQuiver {
    std::vector<std::string> names;  // curve ids, then "star"
    std::vector<long> zf;            // one per curve
    CountMatrix arrows;              // arrows[a][b]: number of arrows a -> b
    CountMatrix relations;

    std::size_t star() const { return zf.size(); }
    std::size_t size() const { return names.size(); }

    static ReconQuiver empty_like(const DualGraph& g)
    {
        ReconQuiver q;
        q.names = g.ids();
        q.names.push_back("star");
        q.zf.assign(g.size(), 0);
        q.arrows.assign(g.size() + 1, std::vector<long>(g.size() + 1, 0));
        q.relations = q.arrows;
        return q;
    }
};

// arrows a->b = ext^1(S_b, S_a), relations a->b = ext^2(S_b, S_a)
inline ReconQuiver build_quiver(const DualGraph& g)
{
    const auto t = ext_table(g);
    const auto z = fundamental_cycle(g);
    ReconQuiver q = ReconQuiver::empty_like(g);
    for (std::size_t i = 0; i < g.size(); ++i)
        q.zf[i] = to_long(z[i]);
    const std::size_t m = g.size() + 1;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            q.arrows[a][b] = t.dims[0][b][a];
            q.relations[a][b] = t.dims[1][b][a];
        }
    return q;
}

inline int global_dimension(const DualGraph& g)
{
    require_valid(g);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.self(static_cast<int>(i)) < -2)
            return 3;
    return 2;
}

struct ProjectiveDimensions {
    std::vector<int> left;   // indexed like ReconQuiver, star last
    std::vector<int> right;
};

// The case description for minimal resolutions.
inline ProjectiveDimensions projective_dimensions(const DualGraph& g)
{
    require_valid(g);
    const std::size_t n = g.size();
    ProjectiveDimensions p;
    p.left.assign(n + 1, 2);
    p.right.assign(n + 1, 2);
    if (global_dimension(g) == 2)
        return p;
    p.right[n] = 3;
    for (std::size_t i = 0; i < n; ++i)
        if (g.self(static_cast<int>(i)) != -2)
            p.left[i] = 3;
    return p;
}

// pdim read off the ext table: largest t with a nonzero ext^t out of the
// simple (left) or into it (right).
inline ProjectiveDimensions projective_dimensions_from_ext(const ExtTable& t)
{
    const std::size_t m = t.curves + 1;
    ProjectiveDimensions p;
    p.left.assign(m, 0);
    p.right.assign(m, 0);
    for (int deg = 1; deg <= 3; ++deg)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (t.dims[deg - 1][a][b] != 0) {
                    p.left[a] = std::max(p.left[a], deg);
                    p.right[b] = std::max(p.right[b], deg);
                }
    return p;
}

inline std::string emit_dot(const ReconQuiver& q)
{
    std::ostringstream o;
    o << "digraph reconstruction {\n";
    for (std::size_t v = 0; v < q.size(); ++v) {
        o << "  \"" << q.names[v] << "\"";
        if (v < q.zf.size())
            o << " [label=\"" << q.names[v] << " (" << q.zf[v] << ")\"]";
        else
            o << " [shape=box]";
        o << ";\n";
    }
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b)
            for (long k = 0; k < q.arrows[a][b]; ++k)
                o << "  \"" << q.names[a] << "\" -> \"" << q.names[b] << "\";\n";
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b)
            if (q.relations[a][b] > 0)
                o << "  \"" << q.names[a] << "\" -> \"" << q.names[b]
                  << "\" [style=dashed, label=\"" << q.relations[a][b] << "\"];\n";
    o << "}\n";
    return o.str();
}

}  // namespace recon
