#pragma once
// Labelled dual graphs of resolved surface singularities: intersection
// pairing, fundamental cycle, canonical cycle. Everything is exact.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace recon {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class DualGraph {
public:
    int add_vertex(std::string id, long self_intersection)
    {
        if (index_.count(id))
            throw std::invalid_argument("duplicate vertex id '" + id + "'");
        if (id.empty())
            throw std::invalid_argument("empty vertex id");
        index_.emplace(id, static_cast<int>(ids_.size()));
        ids_.push_back(std::move(id));
        self_.push_back(self_intersection);
        adj_.emplace_back();
        return static_cast<int>(ids_.size()) - 1;
    }

    // Edges are recorded as given; problems (loops, repeats) surface in
    // validate_graph rather than here, so that bad input can be reported.
    void add_edge(int a, int b)
    {
        check_index(a);
        check_index(b);
        edges_.emplace_back(a, b);
        adj_[a].push_back(b);
        if (a != b)
            adj_[b].push_back(a);
    }
    void add_edge(const std::string& a, const std::string& b) { add_edge(index_of(a), index_of(b)); }

    std::size_t size() const { return ids_.size(); }
    const std::string& id(int i) const { return ids_.at(i); }
    const std::vector<std::string>& ids() const { return ids_; }
    long self(int i) const { return self_.at(i); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int i) const { return adj_.at(i); }
    int degree(int i) const { return static_cast<int>(adj_.at(i).size()); }

    int index_of(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end())
            throw std::invalid_argument("unknown vertex id '" + id + "'");
        return it->second;
    }
    std::optional<int> find(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    // E_i . E_j
    long meet(int i, int j) const
    {
        if (i == j)
            return self_[i];
        return static_cast<long>(std::count(adj_[i].begin(), adj_[i].end(), j));
    }

    std::vector<std::vector<long>> matrix() const
    {
        std::vector<std::vector<long>> m(size(), std::vector<long>(size(), 0));
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                m[i][j] = meet(static_cast<int>(i), static_cast<int>(j));
        return m;
    }

    // same vertices and edges, every label replaced
    DualGraph relabelled(const std::vector<long>& selfs) const
    {
        if (selfs.size() != size())
            throw std::invalid_argument("relabel: wrong number of labels");
        DualGraph g = *this;
        g.self_ = selfs;
        return g;
    }

private:
    void check_index(int i) const
    {
        if (i < 0 || static_cast<std::size_t>(i) >= ids_.size())
            throw std::out_of_range("vertex index out of range");
    }

    std::vector<std::string> ids_;
    std::vector<long> self_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::unordered_map<std::string, int> index_;
};

using Cycle = std::vector<Int>;
using RationalCycle = std::vector<Rational>;

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> problems;  // stable codes, see validate_graph

    void fail(std::string code)
    {
        valid = false;
        if (std::find(problems.begin(), problems.end(), code) == problems.end())
            problems.push_back(std::move(code));
    }
};

class InvalidGraph : public std::runtime_error {
public:
    explicit InvalidGraph(ValidationReport r)
        : std::runtime_error(describe(r)), report(std::move(r)) {}
    ValidationReport report;

private:
    static std::string describe(const ValidationReport& r)
    {
        std::string s = "invalid dual graph:";
        for (auto& p : r.problems)
            s += " " + p;
        return s;
    }
};

// Leading principal minors D_1..D_n of the intersection matrix, by Bareiss
// elimination without pivoting. Stops early (shorter result) if a minor
// vanishes, since the later ones are then not needed for the sign test.
inline std::vector<Int> leading_minors(const DualGraph& g)
{
    const std::size_t n = g.size();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = g.meet(static_cast<int>(i), static_cast<int>(j));
    std::vector<Int> minors;
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(a[k][k]);
        if (a[k][k] == 0)
            break;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return minors;
}

inline bool is_negative_definite(const DualGraph& g)
{
    auto minors = leading_minors(g);
    if (minors.size() != g.size())
        return false;
    for (std::size_t k = 0; k < minors.size(); ++k) {
        // D_k must have sign (-1)^k, k counted from 1
        bool want_negative = (k % 2 == 0);
        if (want_negative ? minors[k] >= 0 : minors[k] <= 0)
            return false;
    }
    return true;
}

// Problem codes: empty, self_intersection_nonnegative, self_loop,
// duplicate_edge, not_connected, not_a_tree, not_negative_definite.
inline ValidationReport validate_graph(const DualGraph& g)
{
    ValidationReport r;
    const std::size_t n = g.size();
    if (n == 0) {
        r.fail("empty");
        return r;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (g.self(static_cast<int>(i)) > -1)
            r.fail("self_intersection_nonnegative");

    std::vector<std::pair<int, int>> seen;
    bool structural = false;
    for (auto [a, b] : g.edges()) {
        if (a == b) {
            r.fail("self_loop");
            structural = true;
            continue;
        }
        auto key = std::minmax(a, b);
        if (std::find(seen.begin(), seen.end(), std::pair<int, int>(key)) != seen.end()) {
            r.fail("duplicate_edge");
            structural = true;
        }
        seen.emplace_back(key);
    }

    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto root = [&](int x) {
        while (comp[x] != x)
            x = comp[x] = comp[comp[x]];
        return x;
    };
    bool cyclic = false;
    for (auto [a, b] : seen) {
        int ra = root(a), rb = root(b);
        if (ra == rb)
            cyclic = true;
        else
            comp[ra] = rb;
    }
    for (std::size_t i = 1; i < n; ++i)
        if (root(static_cast<int>(i)) != root(0)) {
            r.fail("not_connected");
            break;
        }
    if (cyclic)
        r.fail("not_a_tree");

    // with loops or repeated edges the matrix is not an intersection matrix
    if (!structural && !is_negative_definite(g))
        r.fail("not_negative_definite");
    return r;
}

inline void require_valid(const DualGraph& g)
{
    auto r = validate_graph(g);
    if (!r.valid)
        throw InvalidGraph(std::move(r));
}

inline bool is_minimal(const DualGraph& g)
{
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.self(static_cast<int>(i)) == -1)
            return false;
    return true;
}

template <class A, class B>
Rational pairing(const DualGraph& g, const std::vector<A>& c1, const std::vector<B>& c2)
{
    if (c1.size() != g.size() || c2.size() != g.size())
        throw std::invalid_argument("pairing: cycle does not match the graph's vertices");
    Rational s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (c1[i] == 0)
            continue;
        Rational row = Rational(c2[i]) * g.self(static_cast<int>(i));
        for (int j : g.neighbours(static_cast<int>(i)))
            row += Rational(c2[j]);
        s += Rational(c1[i]) * row;
    }
    return s;
}

// Z . E_i
template <class A>
Rational pairing_with_curve(const DualGraph& g, const std::vector<A>& c, int i)
{
    if (c.size() != g.size())
        throw std::invalid_argument("pairing: cycle does not match the graph's vertices");
    Rational s = Rational(c[i]) * g.self(i);
    for (int j : g.neighbours(i))
        s += Rational(c[j]);
    return s;
}

inline Int curve_pairing(const DualGraph& g, const Cycle& z, int i)
{
    Int s = z[i] * g.self(i);
    for (int j : g.neighbours(i))
        s += z[j];
    return s;
}

// Laufer's iteration. `order` fixes which offending vertex is bumped first;
// the default is the declared vertex order.
inline Cycle fundamental_cycle(const DualGraph& g, const std::vector<int>& order)
{
    require_valid(g);
    if (order.size() != g.size())
        throw std::invalid_argument("fundamental_cycle: order must list every vertex");
    Cycle z(g.size(), 1);
    for (;;) {
        bool bumped = false;
        for (int i : order)
            if (curve_pairing(g, z, i) > 0) {
                z[i] += 1;
                bumped = true;
                break;
            }
        if (!bumped)
            return z;
    }
}

inline Cycle fundamental_cycle(const DualGraph& g)
{
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    return fundamental_cycle(g, order);
}

// Solve M z = rhs over the rationals (M nonsingular).
inline RationalCycle solve_exact(std::vector<std::vector<Rational>> a, RationalCycle rhs)
{
    const std::size_t n = rhs.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0)
            ++p;
        if (p == n)
            throw std::logic_error("solve_exact: singular matrix");
        std::swap(a[p], a[k]);
        std::swap(rhs[p], rhs[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0)
                continue;
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    RationalCycle x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational s = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j)
            s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return x;
}

// Z_K: Z_K . E_i = E_i^2 + 2 for every i
inline RationalCycle canonical_cycle(const DualGraph& g)
{
    require_valid(g);
    const std::size_t n = g.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    RationalCycle rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = g.meet(static_cast<int>(i), static_cast<int>(j));
        rhs[i] = g.self(static_cast<int>(i)) + 2;
    }
    return solve_exact(std::move(a), std::move(rhs));
}

inline Int as_integer(const Rational& r, const char* what)
{
    if (boost::multiprecision::denominator(r) != 1)
        throw std::logic_error(std::string(what) + " is not an integer");
    return boost::multiprecision::numerator(r);
}

inline long to_long(const Int& v)
{
    return v.convert_to<long>();
}

// e = 1 - Z_f.Z_f
inline long embedding_dimension(const DualGraph& g)
{
    auto z = fundamental_cycle(g);
    return to_long(1 - as_integer(pairing(g, z, z), "Z_f.Z_f"));
}

inline bool rationality_identity_check(const DualGraph& g)
{
    auto z = fundamental_cycle(g);
    auto k = canonical_cycle(g);
    return pairing(g, k, z) == pairing(g, z, z) + 2;
}

inline std::string to_string(const Rational& r)
{
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace recon
