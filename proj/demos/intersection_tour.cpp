// A quick tour of the first intersection-number tables, computed twice.
//
// The graph sum assembles K(g,n) from trivalent maps and reads off the
// correlators; the ELSV route fits the Hurwitz polynomial P_g and takes its
// top-degree coefficients.  The two pipelines share no code past exact
// rational arithmetic, so agreement here is a real cross-check.

#include <iostream>
#include <utility>
#include <vector>

#include "taumap/elsv.hpp"
#include "taumap/kontsevich.hpp"
#include "taumap/tau_table.hpp"

int main() {
    using namespace taumap;
    const std::vector<std::pair<int, int>> stable = {{0, 3}, {0, 4}, {1, 1}, {1, 2}};
    for (auto [g, n] : stable) {
        std::cout << "(g,n) = (" << g << "," << n << ")\n";
        TauTable from_graphs = expand_and_extract(kontsevich_sum(g, n), g, n);
        TauTable from_hurwitz = tau_from_elsv(elsv_fit(g, n));
        for (const auto& [key, value] : from_graphs.entries()) {
            Rat other = from_hurwitz.get(key.g, key.k).value_or(Rat(0));
            std::cout << "  " << tau_display(key.g, key.k) << " = " << rational_string(value)
                      << (other == value ? "   (ELSV agrees)" : "   (ELSV DISAGREES)") << "\n";
        }
    }
    return 0;
}
