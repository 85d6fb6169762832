// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Known differences from the printed data are pinned exactly and listed on
// the line, so a PASS with notes means "matches except for these cells".

#include <fstream>
#include <iostream>
#include <set>

#include <recon/io.hpp>
#include <recon/sweep.hpp>

#include "support.hpp"

using namespace recon;

namespace {

int failures = 0;

void report(int n, const std::string& what, const std::vector<std::string>& bad, const std::string& note = "")
{
    std::cout << (bad.empty() ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
    if (!note.empty())
        std::cout << " [" << note << "]";
    std::cout << "\n";
    for (std::size_t i = 0; i < bad.size() && i < 10; ++i)
        std::cout << "    " << bad[i] << "\n";
    if (!bad.empty())
        ++failures;
}

template <class F>
std::vector<std::string> guarded(F f)
{
    try {
        return f();
    } catch (const std::exception& e) {
        return {std::string("exception: ") + e.what()};
    }
}

std::string join(const std::vector<std::string>& xs)
{
    std::string s;
    for (const auto& x : xs)
        s += (s.empty() ? "" : ", ") + x;
    return s;
}

std::vector<std::string> fundamental_cycles()
{
    std::vector<std::string> bad;
    auto a = oracle::star_graph({-2, -2, -2, -5, -2, -3}, 1);
    auto b = oracle::star_graph({-2, -2, -2, -3, -2}, 2);
    if (fundamental_cycle(a) != Cycle{1, 2, 1, 2, 1, 1, 1})
        bad.push_back("branched chain with -5");
    if (fundamental_cycle(b) != Cycle{1, 2, 2, 1, 1, 1})
        bad.push_back("branched chain with -3");
    for (const auto& g : {a, b})
        if (fundamental_cycle(g) != oracle::brute_fundamental_cycle(g, 3))
            bad.push_back("exhaustive search disagrees");
    return bad;
}

std::vector<std::string> continued_fractions()
{
    std::vector<std::string> bad;
    const std::vector<std::pair<std::pair<long, long>, std::vector<long>>> printed = {
        {{5, 3}, {2, 3}}, {{40, 11}, {4, 3, 4}}, {{52, 11}, {5, 4, 3}}, {{56, 39}, {2, 2, 5, 2, 3}}};
    for (auto& [ra, al] : printed)
        if (jh_expand(ra.first, ra.second) != al)
            bad.push_back(std::to_string(ra.first) + "/" + std::to_string(ra.second));
    for (long r = 3; r <= 500; ++r)
        for (long a = 2; a < r; ++a)
            if (std::gcd(r, a) == 1) {
                auto al = jh_expand(r, a);
                if (oracle::continued_fraction(al) != std::make_pair(r, a) || jh_value(al) != Rational(r) / a)
                    bad.push_back("round trip " + std::to_string(r) + "/" + std::to_string(a));
            }
    return bad;
}

std::vector<std::string> figures()
{
    auto bad = check_figures(3, 6);
    std::size_t n = 0;
    for (const auto& f : drawn_quivers())
        n += std::string(f.group)[2] == 'b' ? 4 : 1;
    if (n != 6 + 15 + 15 * 4)
        bad.push_back("figure table has " + std::to_string(n) + " cases");
    return bad;
}

std::vector<std::string> step_property()
{
    auto bad = check_b_step(3, 6);
    auto d = check_d_step(60);
    bad.insert(bad.end(), d.begin(), d.end());
    return bad;
}

// I_7 grids cell by cell, plus totals, cross checks and the symbolic grids.
std::vector<std::string> knitting(std::string& note)
{
    std::vector<std::string> bad;
    auto ar = build_I_ar_quiver(7);
    const auto& sp = *ar.specials;
    std::vector<std::string> deviations;
    for (const auto& pg : fixtures::i7_grids) {
        auto r = knit_counts(ar.quiver, sp.vertices(), sp.at(pg.start), default_max_steps(ar.quiver));
        auto d = oracle::compare_printed(pg, grid_trace(ar.quiver, r));
        std::string s = pg.start;
        std::vector<std::string> circles = s == "X" ? std::vector<std::string>{"G@14"} : std::vector<std::string>{};
        std::vector<std::string> values, unprinted;
        if (s == "Z1") {
            values = {"C@34 printed 0 computed 1", "C@35 printed 0 computed 1"};
            unprinted = {"D@36", "E@37", "F@38", "G@39", "H@40"};
        }
        if (d.circles != circles || d.values != values || d.unprinted != unprinted || !d.dots.empty() ||
            !d.layout.empty())
            bad.push_back("grid " + s + " differs: " + join(d.values) + " " + join(d.circles) + " " +
                          join(d.dots) + " " + join(d.unprinted));
        for (auto& c : d.circles)
            deviations.push_back(s + " uncircled " + c);
        for (auto& c : d.values)
            deviations.push_back(s + " " + c);
    }
    note = "printed-grid deviations: " + join(deviations) + "; Z1 run continues to step 41 past the print";

    // final quiver of I_7 from the knitting, in the drawing's names
    const std::map<std::string, std::map<std::string, long long>> drawn = {
        {"R", {{"X", 1}}},          {"X", {{"R", 1}, {"N", 1}}},           {"Y1", {{"Y2", 1}}},
        {"N", {{"X", 1}, {"Z2", 1}, {"Y2", 1}}}, {"Z2", {{"N", 1}, {"Z1", 1}}}, {"Z1", {{"R", 1}, {"Z2", 1}}},
        {"Y2", {{"Y1", 1}, {"N", 1}}}};
    for (auto& [from, v] : sp.names) {
        auto r = knit_counts(ar.quiver, sp.vertices(), v, default_max_steps(ar.quiver));
        std::map<std::string, long long> got;
        for (auto& [to, w] : sp.names)
            if (r.totals[w])
                got[to] = r.totals[w];
        if (got != drawn.at(from))
            bad.push_back("totals from " + from);
    }
    for (const auto& x : check_knitting({7, 31, 61}))
        bad.push_back("cross check " + x);

    for (long b = 3; b <= 5; ++b) {
        auto i = build_I_ar_quiver(30 * (b - 2) + 1);
        auto r = knit_counts(i.quiver, i.specials->vertices(), i.specials->at("M"), default_max_steps(i.quiver));
        auto g = grid_trace(i.quiver, r);
        const long base = 60 * (b - 3) + 1;
        for (const auto& e : fixtures::m_grid) {
            const long n = base + e.x;
            const int row = 7 - e.y;
            long long v = n < static_cast<long>(g.cells[row].size()) ? g.cells[row][n].value : 0;
            if (v != e.a * b + e.c) {
                bad.push_back("symbolic grid b=" + std::to_string(b));
                break;
            }
        }
    }
    return bad;
}

std::vector<std::string> negatives()
{
    std::vector<std::string> bad;
    std::ifstream in(std::string(SAMPLES_DIR) + "/not_negative_definite.json");
    auto g = graph_from_json(json::parse(in));
    auto r = validate_graph(g);
    if (r.valid || r.problems != std::vector<std::string>{"not_negative_definite"})
        bad.push_back("indefinite graph accepted");
    try {
        fundamental_cycle(g);
        bad.push_back("fundamental_cycle ran on an invalid graph");
    } catch (const InvalidGraph&) {
    }
    for (auto spec : {"A:4,2", "I:9"}) {
        if (validate_params(parse_group(spec)).empty())
            bad.push_back(std::string(spec) + " accepted");
        try {
            dual_graph(parse_group(spec));
            bad.push_back(std::string(spec) + " built a graph");
        } catch (const BadGroup&) {
        }
    }
    std::ifstream rin(std::string(SAMPLES_DIR) + "/runaway.json");
    auto t = translation_quiver_from_json(json::parse(rin));
    try {
        knit_counts(t, {t.index_of("s")}, t.index_of("s"), default_max_steps(t));
        bad.push_back("runaway knit terminated");
    } catch (const KnitNonTermination&) {
    }
    return bad;
}

}  // namespace

int main()
{
    const SweepRange range;  // r, n <= 60; 3 <= b <= 6
    report(1, "fundamental cycles of the two branched examples", guarded(fundamental_cycles));
    report(2, "continued fractions, printed and round trip to 500", guarded(continued_fractions));
    report(3, "drawn quivers equal build_quiver (base and b=3..6)", guarded(figures));
    report(4, "rules agree with build_quiver on the catalog", guarded([&] { return check_rules(range); }));
    report(5, "global and projective dimensions on the catalog", guarded([&] { return check_dimensions(range); }));
    report(6, "ext alternating sum equals -E_i.Z_f on the catalog", guarded([&] { return check_euler(range); }));
    report(7, "b -> b+1 adds one arrow at the -b vertex (D: last label)", guarded(step_property));
    std::string note;
    auto k = guarded([&] { return knitting(note); });
    report(8, "I_7 grids, I_7 totals, cross checks I:7 I:31 I:61, symbolic grids", k, note);
    report(9, "negative cases", guarded(negatives));
    return failures ? 1 : 0;
}
