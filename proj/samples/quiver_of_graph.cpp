// Prints the reconstruction algebra quiver of D(52,11) next to the one
// produced by the combinatorial rules.
#include <iostream>

#include <recon/io.hpp>

int main()
{
    using namespace recon;
    const auto g = dual_graph(parse_group("D:52,11"));
    std::cout << "Z_f  " << cycle_json(g, fundamental_cycle(g)).dump() << "\n";
    std::cout << "Z_K  " << cycle_json(g, canonical_cycle(g)).dump() << "\n\n";
    std::cout << quiver_text(build_quiver(g)) << "\n";
    auto r = apply_rules(g);
    std::cout << to_string(r.zf_class.kind) << ", rules agree: "
              << (r.quiver.arrows == build_quiver(g).arrows ? "yes" : "no") << "\n";
}
