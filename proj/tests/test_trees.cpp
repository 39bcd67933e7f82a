#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "taumap/config.hpp"
#include "taumap/numeric.hpp"
#include "taumap/rng.hpp"
#include "taumap/trees.hpp"

using Catch::Approx;
using taumap::cayley_identity_check;
using taumap::cayley_valence_polynomial;
using taumap::count_labeled_trees_direct;
using taumap::edge_factor_mc;
using taumap::edge_tree_decompose;
using taumap::EdgeTreeStats;
using taumap::Int;
using taumap::int_pow;
using taumap::is_tree;
using taumap::LabeledTree;
using taumap::Polynomial;
using taumap::Rat;
using taumap::Real;
using taumap::Rng;
using taumap::root_component_law;
using taumap::sample_uniform_tree;
using taumap::tree_valences;
using taumap::trunk_length_law;
using taumap::trunk_split_law;
using taumap::valence_histogram;

namespace {

std::vector<std::pair<int, int>> normalized_edges(const LabeledTree& t) {
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : t.edges) e.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(e.begin(), e.end());
    return e;
}

LabeledTree make_tree(int m, std::vector<std::pair<int, int>> edges,
                      std::vector<double> labels = {}) {
    LabeledTree t;
    t.m = m;
    t.edges = std::move(edges);
    t.edge_labels = std::move(labels);
    return t;
}

// BFS-from-root encoding of an edge-labeled tree with unlabeled vertices:
// per vertex, in discovery order, the sorted child edge labels.  Two rooted
// trees are isomorphic exactly when their encodings agree, and minimizing
// over roots gives an unrooted canonical form.
std::vector<int> rooted_encoding(int d, const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<int>& labels, int root) {
    std::vector<std::vector<std::pair<int, int>>> adj(d + 1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].emplace_back(labels[e], edges[e].second);
        adj[edges[e].second].emplace_back(labels[e], edges[e].first);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    std::vector<int> enc, queue{root};
    std::vector<char> seen(d + 1, 0);
    seen[root] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int v = queue[h];
        int start = static_cast<int>(enc.size());
        enc.push_back(0);
        for (auto [lab, w] : adj[v]) {
            if (seen[w]) continue;
            ++enc[start];
            enc.push_back(lab);
            seen[w] = 1;
            queue.push_back(w);
        }
    }
    return enc;
}

}  // namespace

TEST_CASE("sequence decoding matches hand-built trees", "[trees]") {
    // (2,2) on four vertices is the star at 2; (3,2) is the path 1-3-2-4.
    auto star = taumap::detail::decode_sequence({2, 2}, 4);
    auto path = taumap::detail::decode_sequence({3, 2}, 4);
    auto norm = [](std::vector<std::pair<int, int>> e) {
        for (auto& [a, b] : e)
            if (a > b) std::swap(a, b);
        std::sort(e.begin(), e.end());
        return e;
    };
    REQUIRE(norm(star) == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}});
    REQUIRE(norm(path) == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {2, 4}});
    REQUIRE(taumap::detail::decode_sequence({}, 2) ==
            std::vector<std::pair<int, int>>{{1, 2}});

    // Each vertex appears in the sequence with multiplicity val - 1.
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 3 + static_cast<int>(rng.below(12));
        auto seq = taumap::detail::random_sequence(m, rng);
        LabeledTree t = make_tree(m, taumap::detail::decode_sequence(seq, m));
        REQUIRE(is_tree(t));
        auto val = tree_valences(t);
        std::vector<int> mult(m + 1, 0);
        for (int a : seq) ++mult[a];
        for (int v = 1; v <= m; ++v) REQUIRE(val[v] == 1 + mult[v]);
    }

    REQUIRE_THROWS_AS(taumap::detail::decode_sequence({1}, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(taumap::detail::decode_sequence({0, 1}, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(taumap::detail::decode_sequence({5, 1}, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(taumap::detail::decode_sequence({}, 1), std::domain_error);
}

TEST_CASE("uniform tree sampling basics", "[trees]") {
    REQUIRE_THROWS_AS(sample_uniform_tree(1, 0), std::domain_error);

    LabeledTree a = sample_uniform_tree(30, 5);
    LabeledTree b = sample_uniform_tree(30, 5);
    LabeledTree c = sample_uniform_tree(30, 6);
    REQUIRE(a.edges == b.edges);
    REQUIRE(a.edge_labels == b.edge_labels);
    REQUIRE(a.edges != c.edges);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        LabeledTree t = sample_uniform_tree(2 + static_cast<int>(seed), seed);
        REQUIRE(is_tree(t));
        // Labels are a permutation of 1..m-1.
        std::vector<double> lab = t.edge_labels;
        std::sort(lab.begin(), lab.end());
        for (int i = 0; i + 1 < t.m; ++i) REQUIRE(lab[i] == i + 1);
    }
}

TEST_CASE("sampling is uniform over small tree spaces", "[trees]") {
    for (int m : {3, 5}) {
        // Index every tree by enumerating all sequences.
        std::map<std::vector<std::pair<int, int>>, int> index;
        std::vector<int> seq(m - 2, 1);
        for (;;) {
            LabeledTree t = make_tree(m, taumap::detail::decode_sequence(seq, m));
            auto key = normalized_edges(t);
            if (!index.count(key)) {
                int next = static_cast<int>(index.size());
                index[key] = next;
            }
            int i = 0;
            while (i < m - 2 && seq[i] == m) {
                seq[i] = 1;
                ++i;
            }
            if (i == m - 2) break;
            ++seq[i];
        }
        long ntrees = static_cast<long>(index.size());
        REQUIRE(Int(ntrees) == int_pow(Int(m), m - 2));

        long samples = 100000;
        std::vector<long> counts(ntrees, 0);
        Rng rng(77);
        for (long i = 0; i < samples; ++i) {
            LabeledTree t = taumap::detail::sample_tree(m, rng);
            ++counts[index.at(normalized_edges(t))];
        }
        std::vector<double> expected(ntrees, 1.0 / static_cast<double>(ntrees));
        REQUIRE(taumap::chi_square_pvalue(counts, expected) >
                taumap::config::uniformity_pvalue_min);
    }
}

TEST_CASE("Cayley valence identity", "[trees]") {
    // m=3 instance written out: z1 z2 z3 (z1+z2+z3).
    Polynomial expect(3);
    expect.add_term({2, 1, 1}, 1);
    expect.add_term({1, 2, 1}, 1);
    expect.add_term({1, 1, 2}, 1);
    REQUIRE(cayley_valence_polynomial(3) == expect);

    for (int m = 2; m <= 7; ++m) REQUIRE(cayley_identity_check(m));

    REQUIRE_THROWS_AS(cayley_identity_check(9), std::domain_error);
    REQUIRE_THROWS_AS(cayley_identity_check(1), std::domain_error);
}

TEST_CASE("labeled tree totals from raw edge subsets", "[trees]") {
    for (int m = 1; m <= 8; ++m)
        REQUIRE(count_labeled_trees_direct(m) == (m == 1 ? Int(1) : int_pow(Int(m), m - 2)));
    REQUIRE_THROWS_AS(count_labeled_trees_direct(9), std::domain_error);
}

TEST_CASE("edge-labeled and rooted edge tree counts", "[trees]") {
    // With d-1 distinct edge labels and unlabeled vertices there are d^{d-3}
    // trees (d >= 3), and d^{d-2} after marking a root.
    for (int d = 2; d <= 6; ++d) {
        std::set<std::vector<int>> unrooted, rooted;
        std::vector<int> perm(d - 1);
        for (int i = 0; i + 1 < d; ++i) perm[i] = i + 1;
        std::vector<int> seq(std::max(0, d - 2), 1);
        for (;;) {
            auto edges = d == 2 ? std::vector<std::pair<int, int>>{{1, 2}}
                                : taumap::detail::decode_sequence(seq, d);
            std::vector<int> labels = perm;
            std::sort(labels.begin(), labels.end());
            do {
                std::vector<int> best;
                for (int root = 1; root <= d; ++root) {
                    auto enc = rooted_encoding(d, edges, labels, root);
                    rooted.insert(enc);
                    if (best.empty() || enc < best) best = enc;
                }
                unrooted.insert(best);
            } while (std::next_permutation(labels.begin(), labels.end()));
            int i = 0;
            while (i < d - 2 && seq[i] == d) {
                seq[i] = 1;
                ++i;
            }
            if (i >= d - 2) break;
            ++seq[i];
        }
        if (d >= 3) REQUIRE(Int(static_cast<long>(unrooted.size())) == int_pow(Int(d), d - 3));
        REQUIRE(Int(static_cast<long>(rooted.size())) == int_pow(Int(d), d - 2));
    }
}

TEST_CASE("decomposition of paths and stars", "[trees]") {
    LabeledTree path = make_tree(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, {1, 2, 3, 4});
    EdgeTreeStats s = edge_tree_decompose(path, 1, 5);
    REQUIRE(s.trunk == std::vector<int>{1, 2, 3, 4, 5});
    REQUIRE(s.root_component_size == 1);
    REQUIRE(s.top_component_size == 1);
    REQUIRE(s.trunk_component_size == 3);
    REQUIRE(s.p == 0);
    REQUIRE(s.q == 0);
    REQUIRE(s.d == 0);

    EdgeTreeStats r = edge_tree_decompose(path, 5, 1);
    REQUIRE(r.trunk == std::vector<int>{5, 4, 3, 2, 1});
    REQUIRE(r.root_component_size == 1);
    REQUIRE(r.top_component_size == 1);

    // Star: the root component is the center plus the m-2 unmarked leaves.
    LabeledTree star = make_tree(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}, {1, 2, 3, 4, 5});
    EdgeTreeStats st = edge_tree_decompose(star, 1, 2);
    REQUIRE(st.trunk == std::vector<int>{1, 2});
    REQUIRE(st.root_component_size == 5);
    REQUIRE(st.top_component_size == 1);
    REQUIRE(st.trunk_component_size == 0);
    REQUIRE(st.d == 0);

    REQUIRE_THROWS_AS(edge_tree_decompose(path, 2, 2), std::domain_error);
    REQUIRE_THROWS_AS(edge_tree_decompose(path, 0, 2), std::invalid_argument);
    LabeledTree bare = make_tree(3, {{1, 2}, {2, 3}});
    REQUIRE_THROWS_AS(edge_tree_decompose(bare, 1, 3), std::invalid_argument);
    LabeledTree dup = make_tree(3, {{1, 2}, {2, 3}}, {1, 1});
    REQUIRE_THROWS_AS(edge_tree_decompose(dup, 1, 3), std::invalid_argument);
    LabeledTree cyc = make_tree(3, {{1, 2}, {1, 2}}, {1, 2});
    REQUIRE_THROWS_AS(edge_tree_decompose(cyc, 1, 3), std::invalid_argument);
}

TEST_CASE("side split follows the label order around interior vertices", "[trees]") {
    // Trunk 1-2-3; branch {4,6} and branch {5} hang off the interior vertex 2.
    std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {2, 4}, {2, 5}, {4, 6}};

    // Label order around vertex 2: (1,2)=1, (2,4)=2, (2,3)=4, (2,5)=5.
    // Walking counterclockwise from the incoming trunk dart, the branch at 4
    // precedes the outgoing dart (side p) and the branch at 5 follows it.
    LabeledTree t1 = make_tree(6, edges, {1, 4, 2, 5, 3});
    EdgeTreeStats a = edge_tree_decompose(t1, 1, 3);
    REQUIRE(a.trunk == std::vector<int>{1, 2, 3});
    REQUIRE(a.trunk_component_size == 4);
    REQUIRE(a.p == 2);
    REQUIRE(a.q == 1);
    REQUIRE(a.d == 3);

    // Swapping the two branch labels swaps the sides.
    LabeledTree t2 = make_tree(6, edges, {1, 4, 5, 2, 3});
    EdgeTreeStats b = edge_tree_decompose(t2, 1, 3);
    REQUIRE(b.p == 1);
    REQUIRE(b.q == 2);

    // Both branches between the trunk darts: p takes everything.
    LabeledTree t3 = make_tree(6, edges, {1, 5, 2, 3, 4});
    EdgeTreeStats c = edge_tree_decompose(t3, 1, 3);
    REQUIRE(c.p == 3);
    REQUIRE(c.q == 0);
}

TEST_CASE("decomposition agrees with a distance-based oracle", "[trees]") {
    Rng rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 8 + static_cast<int>(rng.below(25));
        LabeledTree t = taumap::detail::sample_tree(m, rng);
        auto [root, top] = taumap::detail::random_vertex_pair(m, rng);
        EdgeTreeStats s = edge_tree_decompose(t, root, top);

        // All-pairs distances by BFS from every vertex.
        std::vector<std::vector<int>> adj(m + 1), dist(m + 1);
        for (auto [a, b] : t.edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (int src = 1; src <= m; ++src) {
            dist[src].assign(m + 1, -1);
            dist[src][src] = 0;
            std::vector<int> queue{src};
            for (std::size_t h = 0; h < queue.size(); ++h) {
                int v = queue[h];
                for (int w : adj[v])
                    if (dist[src][w] < 0) {
                        dist[src][w] = dist[src][v] + 1;
                        queue.push_back(w);
                    }
            }
        }
        std::vector<int> trunk;
        for (int v = 1; v <= m; ++v)
            if (dist[root][v] + dist[v][top] == dist[root][top]) trunk.push_back(v);
        REQUIRE(static_cast<long>(trunk.size()) == static_cast<long>(s.trunk.size()));

        long root_size = 0, top_size = 0, mid_size = 0;
        for (int v = 1; v <= m; ++v) {
            int best = -1, where = -1;
            bool tie = false;
            for (int u : trunk) {
                if (best < 0 || dist[v][u] < best) {
                    best = dist[v][u];
                    where = u;
                    tie = false;
                } else if (dist[v][u] == best) {
                    tie = true;
                }
            }
            REQUIRE_FALSE(tie);  // nearest trunk vertex is unique in a tree
            if (where == root)
                ++root_size;
            else if (where == top)
                ++top_size;
            else
                ++mid_size;
        }
        REQUIRE(s.root_component_size == root_size);
        REQUIRE(s.top_component_size == top_size);
        REQUIRE(s.trunk_component_size == mid_size);
        REQUIRE(s.root_component_size + s.top_component_size + s.trunk_component_size == m);
        REQUIRE(s.p + s.q == s.d);
        REQUIRE(s.d == mid_size - (static_cast<long>(trunk.size()) - 2));
    }
}

TEST_CASE("valence of vertex 1: exact law at m=6, limit law at large m", "[trees]") {
    // Enumerating all 6^4 sequences, val(1)-1 counts occurrences of vertex 1,
    // so the counts must be C(4,j) 5^{4-j}: 625, 500, 150, 20, 1.
    std::vector<long> counts(7, 0);
    std::vector<int> seq(4, 1);
    for (;;) {
        LabeledTree t = make_tree(6, taumap::detail::decode_sequence(seq, 6));
        ++counts[tree_valences(t)[1]];
        int i = 0;
        while (i < 4 && seq[i] == 6) {
            seq[i] = 1;
            ++i;
        }
        if (i == 4) break;
        ++seq[i];
    }
    REQUIRE(counts == std::vector<long>{0, 625, 500, 150, 20, 1, 0});

    // The sampled histogram at the same m stays near the exact law.
    auto h6 = valence_histogram(6, 20000, 3);
    auto freq_at = [](const taumap::ValenceHistogram& h, int v) {
        return v < static_cast<int>(h.freq.size()) ? h.freq[v] : 0.0;
    };
    for (int v = 1; v <= 5; ++v)
        REQUIRE(freq_at(h6, v) == Approx(counts[v] / 1296.0).margin(0.012));

    // At large m the law approaches the shifted Poisson e^{-1}/(v-1)!.
    auto h = valence_histogram(100000, 20000, 4);
    REQUIRE(h.tv < 0.02);
    REQUIRE(h.freq[1] == Approx(std::exp(-1.0)).margin(0.015));
    REQUIRE(h.freq[2] == Approx(std::exp(-1.0)).margin(0.015));
    REQUIRE(h.freq[3] == Approx(std::exp(-1.0) / 2).margin(0.015));

    // Bit-identical reruns, independent of the worker count.
    auto h1 = valence_histogram(1000, 5000, 9, 1);
    auto h4 = valence_histogram(1000, 5000, 9, 4);
    REQUIRE(h1.tv == h4.tv);
    REQUIRE(h1.freq == h4.freq);

    REQUIRE_THROWS_AS(valence_histogram(1, 10, 0), std::domain_error);
    REQUIRE_THROWS_AS(valence_histogram(10, 0, 0), std::invalid_argument);
}

TEST_CASE("root component size approaches the Borel law", "[trees]") {
    auto law = root_component_law(2000, 5000, 21);
    REQUIRE(law.tv < 0.05);
    REQUIRE(law.freq[1] == Approx(std::exp(-1.0)).margin(0.02));
    REQUIRE(law.freq[2] == Approx(std::exp(-2.0)).margin(0.02));

    auto law1 = root_component_law(300, 2000, 22, 30, 1);
    auto law3 = root_component_law(300, 2000, 22, 30, 3);
    REQUIRE(law1.tv == law3.tv);
    REQUIRE(law1.freq == law3.freq);
    REQUIRE(law1.tail == law3.tail);

    REQUIRE_THROWS_AS(root_component_law(2, 10, 0), std::domain_error);
    REQUIRE_THROWS_AS(root_component_law(100, 0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(root_component_law(100, 10, 0, 1), std::invalid_argument);
}

TEST_CASE("trunk length scales to the Rayleigh law", "[trees]") {
    auto law = trunk_length_law(2000, 2000, 31);
    REQUIRE(law.ks < 0.05);
    REQUIRE(law.mean == Approx(std::sqrt(std::acos(-1.0) / 2)).margin(0.08));
    REQUIRE(law.median == Approx(std::sqrt(2 * std::log(2.0))).margin(0.08));

    auto a = trunk_length_law(500, 400, 32, 1);
    auto b = trunk_length_law(500, 400, 32, 4);
    REQUIRE(a.ks == b.ks);
    REQUIRE(a.mean == b.mean);

    REQUIRE_THROWS_AS(trunk_length_law(1, 10, 0), std::domain_error);
    REQUIRE_THROWS_AS(trunk_length_law(100, 0, 0), std::invalid_argument);
}

TEST_CASE("trunk side fraction is uniform", "[trees]") {
    auto law = trunk_split_law(2000, 2000, 41);
    REQUIRE(law.ks < 0.06);
    REQUIRE(law.mean == Approx(0.5).margin(0.03));
    REQUIRE(law.variance == Approx(1.0 / 12).margin(0.02));
    REQUIRE(law.samples + law.skipped == 2000);

    auto a = trunk_split_law(400, 500, 42, 1);
    auto b = trunk_split_law(400, 500, 42, 4);
    REQUIRE(a.ks == b.ks);
    REQUIRE(a.mean == b.mean);

    REQUIRE_THROWS_AS(trunk_split_law(2, 10, 0), std::domain_error);
    REQUIRE_THROWS_AS(trunk_split_law(100, 0, 0), std::invalid_argument);
}

TEST_CASE("assembly success rate sums to exp(-2)/2", "[trees]") {
    Real target = exp(Real(-2)) / 2;
    Real got = taumap::assembly_success_rate(Real(1e-12));
    REQUIRE(abs(got - target) < 1e-12);

    // Conditional probability at the all-ones valence triple: (0!)^3/2!.
    REQUIRE(Rat(taumap::factorial(0) * taumap::factorial(0) * taumap::factorial(0),
                taumap::factorial(2)) == Rat(1, 2));

    // Truncating the cube at 30 vs 40 moves nothing at the 1e-12 scale.
    Real c30 = taumap::detail::assembly_sum_capped(30);
    Real c40 = taumap::detail::assembly_sum_capped(40);
    REQUIRE(abs(c40 - c30) < 1e-12);
    REQUIRE(abs(c40 - target) < 1e-12);

    REQUIRE_THROWS_AS(taumap::assembly_success_rate(Real(0)), std::invalid_argument);
}

TEST_CASE("edge factor Monte Carlo matches the closed form", "[trees]") {
    // Equal rates make the importance weight identically one, so these are
    // exact up to floating-point addition.
    REQUIRE(edge_factor_mc(0.5, 0.5, 1000, 1) == Approx(1.0).epsilon(1e-12));
    REQUIRE(edge_factor_mc(2.0, 2.0, 1000, 1) == Approx(0.5).epsilon(1e-12));
    REQUIRE(edge_factor_mc(1.0, 1.0, 1000, 1) == Approx(std::sqrt(0.5)).epsilon(1e-12));

    // Unequal rates exercise the actual sampling.
    REQUIRE(edge_factor_mc(1.0, 4.0, 200000, 2) ==
            Approx(std::sqrt(2.0) / 3.0).epsilon(0.01));
    REQUIRE(edge_factor_mc(9.0, 0.25, 200000, 2) ==
            Approx(std::sqrt(2.0) / 3.5).epsilon(0.02));

    REQUIRE(edge_factor_mc(1.0, 4.0, 50000, 5, 1) == edge_factor_mc(1.0, 4.0, 50000, 5, 4));

    REQUIRE_THROWS_AS(edge_factor_mc(0.0, 1.0, 10, 0), std::domain_error);
    REQUIRE_THROWS_AS(edge_factor_mc(1.0, -1.0, 10, 0), std::domain_error);
    REQUIRE_THROWS_AS(edge_factor_mc(1.0, 1.0, 0, 0), std::invalid_argument);
}
