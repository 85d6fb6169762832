// Knits every special of I_7 and prints the grid started at X.
#include <iostream>

#include <recon/knitting.hpp>

int main()
{
    using namespace recon;
    auto ar = build_I_ar_quiver(7);
    const auto& sp = *ar.specials;
    for (const auto& [name, v] : sp.names) {
        auto r = knit_counts(ar.quiver, sp.vertices(), v, default_max_steps(ar.quiver));
        std::cout << name << " ->";
        for (const auto& [to, w] : sp.names)
            if (r.totals[w])
                std::cout << " " << to << "(" << r.totals[w] << ")";
        std::cout << "\n";
    }
    auto x = knit_counts(ar.quiver, sp.vertices(), sp.at("X"), 1000);
    std::cout << "\n" << grid_trace(ar.quiver, x).text();
}
