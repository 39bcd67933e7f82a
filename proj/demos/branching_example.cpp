// One transitive factorization taken apart by hand.
//
// The word (1 2)(1 3)(2 4)(1 4)(1 3), applied rightmost first, multiplies to
// the 4-cycle (1 2 4 3).  Five transpositions on four sheets force genus 1
// by Riemann-Hurwitz, and the branching graph built from the word must agree:
// one face, perimeter 4, Euler characteristic of a torus.

#include <iostream>

#include "taumap/hurwitz.hpp"
#include "taumap/ribbon.hpp"

int main() {
    using namespace taumap;

    Factorization f;
    f.degree = 4;
    f.transpositions = {{1, 2}, {1, 3}, {2, 4}, {1, 4}, {1, 3}};
    f.target = Permutation::from_cycles(4, "(1 2 4 3)");

    std::cout << "word:";
    for (auto [a, b] : f.transpositions) std::cout << " (" << a << " " << b << ")";
    std::cout << "\nproduct: " << f.product().to_cycle_string()
              << (f.product() == f.target ? "  = target" : "  != target") << "\n"
              << "transitive: " << (f.transitive() ? "yes" : "no") << "\n";

    LabeledBranchingGraph b = branching_graph_from_factorization(f);
    std::cout << "branching graph: " << b.graph.num_darts << " darts, sigma = "
              << b.graph.sigma.to_cycle_string() << ", alpha = "
              << b.graph.alpha.to_cycle_string() << "\n"
              << "face perimeters: " << face_perimeters(b).to_string() << "\n"
              << "genus: " << genus(b.graph) << "\n";

    HomotopyOutcome outcome = homotopy_type(b);
    if (const auto* ht = std::get_if<HomotopyType>(&outcome))
        std::cout << "homotopy type: graph with " << ht->graph.num_darts << " darts, genus "
                  << genus(ht->graph) << ", aut order " << automorphism_order(ht->graph)
                  << "\n";
    else
        std::cout << "homotopy type: degenerate\n";
    return 0;
}
