// recon: command line front end.
// Exit codes: 0 ok, 1 invalid input or failed check, 2 usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include <recon/io.hpp>
#include <recon/sweep.hpp>

using namespace recon;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in)
        throw BadInput("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

json read_json(const std::string& path)
{
    try {
        return json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw BadInput(std::string("malformed JSON: ") + e.what());
    }
}

// A graph file, or a group spec such as "D:7,4".
DualGraph load_graph(const std::string& arg)
{
    if (arg.size() > 2 && arg[1] == ':' && std::string("ADTOI").find(arg[0]) != std::string::npos)
        return dual_graph(parse_group(arg));
    return graph_from_json(read_json(arg));
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::string& in)
{
    auto g = load_graph(in);
    auto r = validate_graph(g);
    print(to_json(r));
    return r.valid ? 0 : 1;
}

int cmd_cycle(const std::string& in, const std::string& format)
{
    auto g = load_graph(in);
    require_valid(g);
    auto z = fundamental_cycle(g);
    auto k = canonical_cycle(g);
    json j;
    j["zf"] = cycle_json(g, z);
    j["zk"] = cycle_json(g, k);
    j["embedding_dimension"] = embedding_dimension(g);
    j["rational"] = rationality_identity_check(g);
    j["minimal"] = is_minimal(g);
    if (format == "text") {
        std::cout << "Z_f = " << j["zf"].dump() << "\nZ_K = " << j["zk"].dump() << "\ne = "
                  << j["embedding_dimension"] << "\nrationality identity: "
                  << (j["rational"].get<bool>() ? "holds" : "fails") << "\n";
    } else {
        print(j);
    }
    return 0;
}

void emit_quiver(const ReconQuiver& q, const std::string& format)
{
    if (format == "dot")
        std::cout << emit_dot(q);
    else if (format == "text")
        std::cout << quiver_text(q);
    else
        print(to_json(q));
}

int cmd_quiver(const std::string& in, const std::string& format)
{
    auto g = load_graph(in);
    emit_quiver(build_quiver(g), format);
    return 0;
}

int cmd_rules(const std::string& in, const std::string& format, bool trace)
{
    auto g = load_graph(in);
    auto r = apply_rules(g);
    bool agree = r.quiver.arrows == build_quiver(g).arrows;
    if (format == "dot") {
        std::cout << emit_dot(r.quiver);
    } else if (format == "text") {
        std::cout << "class: " << to_string(r.zf_class.kind) << "\n" << quiver_text(r.quiver)
                  << "agrees with build_quiver: " << (agree ? "yes" : "no") << "\n";
    } else {
        json j;
        j["class"] = to_json(g, r.zf_class);
        j["quiver"] = to_json(r.quiver);
        if (trace)
            j["trace"] = rule_trace_json(g, r);
        j["agrees"] = agree;
        print(j);
    }
    return agree ? 0 : 1;
}

GroupId group_arg(const std::string& spec, long b)
{
    auto id = parse_group(spec);
    if (b > 0) {
        if (family_modulus(id.family) == 0)
            throw BadGroup("--b applies to the T, O and I families only");
        id = with_b(id, b);
    }
    require_valid(id);
    return id;
}

int knit_report(const TranslationQuiver& t, const std::vector<std::pair<std::string, int>>& specials,
                const std::vector<std::string>& starts, std::size_t max_steps, bool trace,
                const std::string& format)
{
    std::vector<int> verts;
    for (auto& kv : specials)
        verts.push_back(kv.second);
    json out = json::object();
    for (const auto& s : starts) {
        int v = -1;
        for (auto& kv : specials)
            if (kv.first == s)
                v = kv.second;
        if (v < 0)
            throw BadInput("start '" + s + "' is not special");
        auto r = knit_counts(t, verts, v, max_steps);
        json totals = json::object();
        for (auto& [name, w] : specials)
            totals[name] = r.totals[w];
        if (format == "text") {
            std::cout << "from " << s << ":";
            for (auto& [name, w] : specials)
                if (r.totals[w])
                    std::cout << " " << name << "=" << r.totals[w];
            std::cout << "\n";
            if (trace)
                std::cout << grid_trace(t, r).text() << "\n";
        } else {
            out[s]["totals"] = totals;
            out[s]["steps"] = r.lambda.size();
            if (trace)
                out[s]["grid"] = grid_trace(t, r).text();
        }
    }
    if (format != "text")
        print(out);
    return 0;
}

int cmd_group(const std::string& spec, long b, bool graph_only, bool knit, bool check, bool trace,
              std::size_t max_steps, const std::string& format)
{
    auto id = group_arg(spec, b);
    auto g = dual_graph(id);
    if (check) {
        auto c = cross_check(id);
        for (auto& m : c.mismatches)
            std::cerr << m << "\n";
        std::cout << (c.ok ? "PASS" : "FAIL") << "\n";
        return c.ok ? 0 : 1;
    }
    if (knit) {
        if (id.family != 'I')
            throw BadGroup("knitting is only built in for the I family");
        auto ar = build_I_ar_quiver(id.p);
        if (!ar.specials)
            throw BadGroup("special positions for " + id.str() + " are not known");
        std::vector<std::string> starts;
        for (auto& kv : ar.specials->names)
            starts.push_back(kv.first);
        return knit_report(ar.quiver, ar.specials->names, starts,
                           max_steps ? max_steps : default_max_steps(ar.quiver), trace, format);
    }
    if (graph_only) {
        print(to_json(g));
        return 0;
    }
    if (format == "json") {
        json j;
        j["group"] = id.str();
        if (family_modulus(id.family))
            j["b"] = family_b(id);
        j["graph"] = to_json(g);
        j["quiver"] = to_json(build_quiver(g));
        print(j);
    } else {
        emit_quiver(build_quiver(g), format);
    }
    return 0;
}

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty())
            out.push_back(tok);
    return out;
}

int cmd_knit(const std::string& in, const std::string& start, const std::string& specials,
             std::size_t max_steps, bool trace, const std::string& format)
{
    TranslationQuiver t;
    std::vector<std::pair<std::string, int>> named;
    if (in.size() > 2 && in[0] == 'I' && in[1] == ':') {
        auto ar = build_I_ar_quiver(parse_group(in).p);
        if (!ar.specials)
            throw BadGroup("special positions for " + in + " are not known");
        t = ar.quiver;
        named = ar.specials->names;
    } else {
        t = translation_quiver_from_json(read_json(in));
        for (auto& s : split(specials))
            named.emplace_back(s, t.index_of(s));
    }
    if (named.empty())
        throw BadInput("knit needs --specials");
    std::vector<std::string> starts = start.empty() ? std::vector<std::string>{} : split(start);
    if (starts.empty())
        for (auto& kv : named)
            starts.push_back(kv.first);
    return knit_report(t, named, starts, max_steps ? max_steps : default_max_steps(t), trace, format);
}

int cmd_sweep(long b, const std::string& format)
{
    SweepRange r;
    if (b > 0)
        r.b_lo = r.b_hi = b;
    std::vector<std::pair<std::string, std::vector<std::string>>> rows = {
        {"figures", check_figures(r.b_lo, r.b_hi)},
        {"rules", check_rules(r)},
        {"dimensions", check_dimensions(r)},
        {"euler", check_euler(r)},
        {"b-step", check_b_step(r.b_lo, r.b_hi)},
        {"knitting", check_knitting({7, 31, 61})},
    };
    bool ok = true;
    json j = json::object();
    for (auto& [name, bad] : rows) {
        ok = ok && bad.empty();
        if (format == "json")
            j[name] = bad;
        else {
            std::cout << (bad.empty() ? "PASS " : "FAIL ") << name;
            for (auto& x : bad)
                std::cout << " " << x;
            std::cout << "\n";
        }
    }
    if (format == "json")
        print(j);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"reconstruction algebra quivers from resolution graphs"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}))
        ->capture_default_str();
    long b = 0;
    std::size_t max_steps = 0;
    bool trace = false;
    app.add_option("--b", b, "family parameter b for T/O/I groups");
    app.add_option("--max-steps", max_steps, "knitting step cap (default 64 per vertex)");
    app.add_flag("--trace", trace, "print grids or rule traces");

    std::string input;
    auto* validate = app.add_subcommand("validate", "check a dual graph");
    validate->add_option("input", input, "graph JSON, group spec, or - for stdin")->required();
    auto* cycle = app.add_subcommand("cycle", "fundamental and canonical cycles");
    cycle->add_option("input", input)->required();
    auto* quiver = app.add_subcommand("quiver", "reconstruction algebra quiver");
    quiver->add_option("input", input)->required();
    auto* rules = app.add_subcommand("rules", "quiver from the combinatorial rules");
    rules->add_option("input", input)->required();

    bool graph_only = false, knit = false, check = false;
    auto* group = app.add_subcommand("group", "graph and quiver of a group, e.g. D:7,4 or I:7");
    group->add_option("spec", input)->required();
    group->add_flag("--graph", graph_only, "print only the dual graph");
    group->add_flag("--knit", knit, "knit from every special (I family)");
    group->add_flag("--cross-check", check, "compare knitting with the geometric quiver");

    std::string start, specials;
    auto* knitc = app.add_subcommand("knit", "knitting on a translation quiver");
    knitc->add_option("input", input, "translation quiver JSON or I:m")->required();
    knitc->add_option("--start", start, "comma separated start vertices (default: every special)");
    knitc->add_option("--specials", specials, "comma separated special vertices (JSON input)");

    auto* sweep = app.add_subcommand("sweep", "catalog cross-validation");

    for (auto* sub : {validate, cycle, quiver, rules, group, knitc, sweep})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*validate)
            return cmd_validate(input);
        if (*cycle)
            return cmd_cycle(input, format);
        if (*quiver)
            return cmd_quiver(input, format);
        if (*rules)
            return cmd_rules(input, format, trace);
        if (*group)
            return cmd_group(input, b, graph_only, knit, check, trace, max_steps, format);
        if (*knitc)
            return cmd_knit(input, start, specials, max_steps, trace, format);
        if (*sweep)
            return cmd_sweep(b, format);
    } catch (const KnitNonTermination& e) {
        std::cerr << "error: " << e.what() << " (" << e.lambda.size() << " layers computed)\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
