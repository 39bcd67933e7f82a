// Random labeled trees against their limit laws, at a scale that runs in
// seconds.  Tighter scales (and the tolerances that come with them) live in
// the verification suite; this is just a feel for the numbers.

#include <cmath>
#include <iostream>

#include "taumap/config.hpp"
#include "taumap/trees.hpp"

int main() {
    using namespace taumap;
    const std::uint64_t seed = config::default_seed;

    auto valence = valence_histogram(2000, 20000, seed);
    std::cout << "valence of vertex 1, m = 2000:            TV to shifted Poisson = "
              << valence.tv << "\n";

    auto component = root_component_law(2000, 20000, seed, 30);
    std::cout << "root component in an edge tree, m = 2000: TV to Borel          = "
              << component.tv << "\n";

    auto trunk = trunk_length_law(10000, 2000, seed);
    std::cout << "trunk size / sqrt(m), m = 10000:          KS to Rayleigh       = "
              << trunk.ks << "\n";

    auto split = trunk_split_law(10000, 2000, seed);
    std::cout << "trunk split fraction, m = 10000:          KS to Uniform[0,1]   = "
              << split.ks << "\n";

    double mc = edge_factor_mc(1.0, 4.0, 200000, seed);
    double closed = std::sqrt(2.0) / (std::sqrt(1.0) + std::sqrt(4.0));
    std::cout << "edge factor at (s1,s2) = (1,4):           MC " << mc << " vs closed form "
              << closed << "\n";

    double series = static_cast<double>(assembly_success_rate(Real(1e-12)));
    std::cout << "assembly success rate:                    " << series << " vs e^-2/2 = "
              << std::exp(-2.0) / 2 << "\n";
    return 0;
}
