#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "taumap/numeric.hpp"
#include "taumap/parallel.hpp"
#include "taumap/polynomial.hpp"
#include "taumap/rng.hpp"
#include "taumap/stats.hpp"

namespace taumap {

// Labeled tree on vertices 1..m.  Edge labels, when present, are distinct
// reals; their relative order induces the planar embedding used by
// edge_tree_decompose.
struct LabeledTree {
    int m = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<double> edge_labels;
};

inline std::vector<int> tree_valences(const LabeledTree& t) {
    std::vector<int> val(t.m + 1, 0);
    for (const auto& [a, b] : t.edges) {
        ++val[a];
        ++val[b];
    }
    return val;
}

// Union-find cycle test; with exactly m-1 edges, acyclic and connected are
// equivalent, so this settles both invariants at once.
inline bool is_tree(const LabeledTree& t) {
    if (t.m < 1 || static_cast<int>(t.edges.size()) != t.m - 1) return false;
    std::vector<int> parent(t.m + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [a, b] : t.edges) {
        if (a < 1 || a > t.m || b < 1 || b > t.m) return false;
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

namespace detail {

// Linear-time decode of the classical tree sequence (length m-2 over vertex
// ids 1..m).  Under the bijection each vertex shows up in the sequence with
// multiplicity val - 1.
inline std::vector<std::pair<int, int>> decode_sequence(const std::vector<int>& seq, int m) {
    if (m < 2) throw std::domain_error("decode_sequence: need m >= 2");
    if (static_cast<int>(seq.size()) != m - 2)
        throw std::invalid_argument("decode_sequence: sequence length must be m-2");
    std::vector<int> deg(m + 1, 1);
    for (int a : seq) {
        if (a < 1 || a > m) throw std::invalid_argument("decode_sequence: vertex id out of range");
        ++deg[a];
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m - 1);
    int ptr = 1;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int a : seq) {
        edges.emplace_back(leaf, a);
        if (--deg[a] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, m);
    return edges;
}

inline std::vector<int> random_sequence(int m, Rng& rng) {
    std::vector<int> seq(m - 2);
    for (int& a : seq) a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    return seq;
}

inline LabeledTree sample_tree(int m, Rng& rng) {
    LabeledTree t;
    t.m = m;
    t.edges = decode_sequence(random_sequence(m, rng), m);
    // A random permutation of 1..m-1 has the same relative order as i.i.d.
    // distinct uniform reals, which is all the embedding convention sees.
    t.edge_labels.resize(m - 1);
    for (int i = 0; i + 1 < m; ++i) t.edge_labels[i] = i + 1;
    rng.shuffle(t.edge_labels);
    return t;
}

// Compressed adjacency with edge ids, darts of vertex v at [off[v], off[v+1]).
struct TreeAdjacency {
    std::vector<int> off, nbr, eid;
};

inline TreeAdjacency build_adjacency(const LabeledTree& t) {
    int m = t.m;
    TreeAdjacency a;
    a.off.assign(m + 2, 0);
    for (const auto& [x, y] : t.edges) {
        ++a.off[x + 1];
        ++a.off[y + 1];
    }
    for (int v = 1; v <= m; ++v) a.off[v + 1] += a.off[v];
    a.nbr.resize(2 * (m - 1));
    a.eid.resize(2 * (m - 1));
    std::vector<int> cursor(a.off.begin(), a.off.end() - 1);
    for (int e = 0; e + 1 < m; ++e) {
        auto [x, y] = t.edges[e];
        a.nbr[cursor[x]] = y;
        a.eid[cursor[x]] = e;
        ++cursor[x];
        a.nbr[cursor[y]] = x;
        a.eid[cursor[y]] = e;
        ++cursor[y];
    }
    return a;
}

// Path of vertices from root to top, endpoints included.
inline std::vector<int> trunk_path(const TreeAdjacency& a, int m, int root, int top) {
    std::vector<int> parent(m + 1, 0), order;
    order.reserve(m);
    parent[root] = root;
    order.push_back(root);
    for (std::size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        for (int j = a.off[v]; j < a.off[v + 1]; ++j) {
            int w = a.nbr[j];
            if (parent[w] == 0) {
                parent[w] = v;
                order.push_back(w);
            }
        }
    }
    std::vector<int> trunk;
    for (int v = top; v != root; v = parent[v]) trunk.push_back(v);
    trunk.push_back(root);
    std::reverse(trunk.begin(), trunk.end());
    return trunk;
}

}  // namespace detail

inline LabeledTree sample_uniform_tree(int m, std::uint64_t seed) {
    if (m < 2) throw std::domain_error("sample_uniform_tree: need m >= 2");
    Rng rng(seed);
    return detail::sample_tree(m, rng);
}

// Sum of z_1^{val(1)} ... z_m^{val(m)} over all m^{m-2} labeled trees,
// enumerated through the sequence bijection.
inline Polynomial cayley_valence_polynomial(int m) {
    if (m < 2 || m > 8)
        throw std::domain_error("cayley_valence_polynomial: supported for 2 <= m <= 8");
    Polynomial sum(m);
    std::vector<int> seq(m - 2, 1);
    for (;;) {
        auto edges = detail::decode_sequence(seq, m);
        std::vector<int> exps(m, 0);
        for (const auto& [a, b] : edges) {
            ++exps[a - 1];
            ++exps[b - 1];
        }
        sum.add_term(exps, 1);
        int i = 0;
        while (i < m - 2 && seq[i] == m) {
            seq[i] = 1;
            ++i;
        }
        if (i == m - 2) break;
        ++seq[i];
    }
    return sum;
}

inline bool cayley_identity_check(int m) {
    Polynomial lhs = cayley_valence_polynomial(m);
    Polynomial sumz(m);
    for (int i = 0; i < m; ++i) sumz += Polynomial::variable(m, i);
    Polynomial rhs = sumz.pow(m - 2);
    for (int i = 0; i < m; ++i) rhs = rhs * Polynomial::variable(m, i);
    return lhs == rhs;
}

// Independent count of labeled trees on m vertices: enumerate the
// (m-1)-subsets of the complete graph's edge set and keep the acyclic ones.
// Confirms the m^{m-2} total without going through the sequence bijection.
inline Int count_labeled_trees_direct(int m) {
    if (m < 1 || m > 8)
        throw std::domain_error("count_labeled_trees_direct: supported for 1 <= m <= 8");
    if (m == 1) return 1;
    std::vector<std::pair<int, int>> all;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) all.emplace_back(a, b);
    int e = static_cast<int>(all.size());
    int k = m - 1;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    Int count = 0;
    std::vector<int> parent(m + 1);
    for (;;) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        bool acyclic = true;
        for (int j : idx) {
            int ra = find(all[j].first), rb = find(all[j].second);
            if (ra == rb) {
                acyclic = false;
                break;
            }
            parent[ra] = rb;
        }
        if (acyclic) ++count;
        int i = k - 1;
        while (i >= 0 && idx[i] == e - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return count;
}

// The two marked vertices split a tree into root, top, and trunk components:
// every vertex joins the component of its closest trunk vertex, and trunk
// vertices count toward their own component, so the three sizes add up to m.
// p and q count the off-trunk vertices of the trunk component on the two
// sides of the trunk in the embedding induced by the edge labels; d = p + q.
struct EdgeTreeStats {
    int m = 0;
    int root = 0;
    int top = 0;
    std::vector<int> trunk;
    long root_component_size = 0;
    long top_component_size = 0;
    long trunk_component_size = 0;
    long p = 0;
    long q = 0;
    long d = 0;
};

namespace detail {

// Components and (optionally) the side split.  Assumes t is a valid tree and
// root != top; sides additionally assume m-1 distinct edge labels.
inline EdgeTreeStats decompose_core(const LabeledTree& t, const TreeAdjacency& adj, int root,
                                    int top, bool sides) {
    int m = t.m;
    EdgeTreeStats s;
    s.m = m;
    s.root = root;
    s.top = top;
    s.trunk = trunk_path(adj, m, root, top);

    // Nearest trunk vertex of each vertex, and for off-trunk vertices the
    // edge through which their branch meets the trunk.
    std::vector<int> anchor(m + 1, 0), branch(m + 1, -1), queue;
    queue.reserve(m);
    for (int v : s.trunk) {
        anchor[v] = v;
        queue.push_back(v);
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int v = queue[h];
        for (int j = adj.off[v]; j < adj.off[v + 1]; ++j) {
            int w = adj.nbr[j];
            if (anchor[w] != 0) continue;
            anchor[w] = anchor[v];
            branch[w] = anchor[v] == v ? adj.eid[j] : branch[v];
            queue.push_back(w);
        }
    }
    for (int v = 1; v <= m; ++v) {
        if (anchor[v] == root)
            ++s.root_component_size;
        else if (anchor[v] == top)
            ++s.top_component_size;
        else
            ++s.trunk_component_size;
    }
    if (!sides) return s;

    std::vector<long> branch_count(t.edges.size(), 0);
    for (int v = 1; v <= m; ++v)
        if (branch[v] >= 0 && anchor[v] != root && anchor[v] != top) ++branch_count[branch[v]];

    // At an interior trunk vertex the incident edges, read in label order,
    // form the counterclockwise cyclic order; branches between the incoming
    // and outgoing trunk darts fall on side p, the rest on side q.
    std::vector<std::pair<double, int>> inc;
    for (std::size_t i = 1; i + 1 < s.trunk.size(); ++i) {
        int w = s.trunk[i], prev = s.trunk[i - 1], next = s.trunk[i + 1];
        inc.clear();
        for (int j = adj.off[w]; j < adj.off[w + 1]; ++j)
            inc.emplace_back(t.edge_labels[adj.eid[j]], j);
        std::sort(inc.begin(), inc.end());
        int degw = static_cast<int>(inc.size());
        int pos_in = -1, pos_out = -1;
        for (int k = 0; k < degw; ++k) {
            int j = inc[k].second;
            if (adj.nbr[j] == prev)
                pos_in = k;
            else if (adj.nbr[j] == next)
                pos_out = k;
        }
        int span = ((pos_out - pos_in) % degw + degw) % degw;
        for (int k = 0; k < degw; ++k) {
            if (k == pos_in || k == pos_out) continue;
            long c = branch_count[adj.eid[inc[k].second]];
            int rel = ((k - pos_in) % degw + degw) % degw;
            if (rel < span)
                s.p += c;
            else
                s.q += c;
        }
    }
    s.d = s.p + s.q;
    return s;
}

}  // namespace detail

inline EdgeTreeStats edge_tree_decompose(const LabeledTree& t, int root, int top) {
    if (!is_tree(t)) throw std::invalid_argument("edge_tree_decompose: not a tree");
    if (root < 1 || root > t.m || top < 1 || top > t.m)
        throw std::invalid_argument("edge_tree_decompose: marked vertex out of range");
    if (root == top) throw std::domain_error("edge_tree_decompose: root and top must differ");
    if (t.edge_labels.size() != t.edges.size())
        throw std::invalid_argument("edge_tree_decompose: distinct edge labels required");
    std::vector<double> sorted_labels = t.edge_labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    if (std::adjacent_find(sorted_labels.begin(), sorted_labels.end()) != sorted_labels.end())
        throw std::invalid_argument("edge_tree_decompose: distinct edge labels required");
    auto adj = detail::build_adjacency(t);
    return detail::decompose_core(t, adj, root, top, true);
}

namespace detail {

// Monte-Carlo work is split over a fixed number of blocks regardless of the
// worker count, and per-sample generators come from Rng::for_sample, so every
// statistic is bit-identical for any --jobs value.
inline constexpr long kSampleBlocks = 64;

inline std::pair<long, long> block_range(long samples, long b) {
    return {samples * b / kSampleBlocks, samples * (b + 1) / kSampleBlocks};
}

inline std::pair<int, int> random_vertex_pair(int m, Rng& rng) {
    int root = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    int top = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - 1)));
    if (top >= root) ++top;
    return {root, top};
}

}  // namespace detail

struct ValenceHistogram {
    std::vector<double> freq;  // freq[v] = empirical P(val(vertex 1) = v)
    double tv = 0.0;           // total variation to the shifted Poisson limit
    long samples = 0;
};

// In the sequence encoding, vertex 1 appears val-1 times among m-2 uniform
// entries, so val(vertex 1) - 1 is exactly Binomial(m-2, 1/m); the histogram
// samples that identity directly instead of decoding whole trees.  The
// equivalence is checked exactly against decoded trees in the test suite.
inline ValenceHistogram valence_histogram(int m, long samples, std::uint64_t seed, int jobs = 1) {
    if (m < 2) throw std::domain_error("valence_histogram: need m >= 2");
    if (samples < 1) throw std::invalid_argument("valence_histogram: need samples >= 1");
    auto blocks = parallel_map<std::vector<long>>(detail::kSampleBlocks, jobs, [&](long b) {
        auto [lo, hi] = detail::block_range(samples, b);
        std::vector<long> counts;
        for (long i = lo; i < hi; ++i) {
            Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(i));
            long v = 1 + rng.binomial(m - 2, 1.0 / m);
            if (v >= static_cast<long>(counts.size())) counts.resize(v + 1, 0);
            ++counts[v];
        }
        return counts;
    });
    ValenceHistogram h;
    h.samples = samples;
    std::vector<long> counts;
    for (const auto& blk : blocks) {
        if (blk.size() > counts.size()) counts.resize(blk.size(), 0);
        for (std::size_t v = 0; v < blk.size(); ++v) counts[v] += blk[v];
    }
    h.freq.assign(counts.size(), 0.0);
    for (std::size_t v = 0; v < counts.size(); ++v)
        h.freq[v] = static_cast<double>(counts[v]) / static_cast<double>(samples);
    std::size_t len = std::max<std::size_t>(counts.size(), 26);
    std::vector<double> limit(len, 0.0);
    double term = std::exp(-1.0);  // e^{-1}/(v-1)! at v = 1
    for (std::size_t v = 1; v < len; ++v) {
        limit[v] = term;
        term /= static_cast<double>(v);
    }
    h.tv = tv_distance(h.freq, limit);
    return h;
}

struct ComponentLawStats {
    std::vector<double> freq;  // freq[k] = empirical P(root component size = k), k <= k_max
    double tail = 0.0;         // empirical mass beyond k_max
    double tv = 0.0;           // TV to the Borel law coarsened over the same bins
    long samples = 0;
    int k_max = 0;
};

// Root-component size of a uniformly sampled tree with two uniformly chosen
// distinct marked vertices, compared to the Borel law k^{k-1} e^{-k}/k!.
// Both laws are coarsened to the bins {1, ..., k_max, >k_max}: the Borel
// tail is k^{-3/2}-heavy, so the raw empirical distance to it is dominated
// by never-observed sizes rather than by the fit of the histogram.
inline ComponentLawStats root_component_law(int m, long samples, std::uint64_t seed,
                                            int k_max = 50, int jobs = 1) {
    if (m < 3) throw std::domain_error("root_component_law: need m >= 3");
    if (samples < 1 || k_max < 2)
        throw std::invalid_argument("root_component_law: need samples >= 1 and k_max >= 2");
    auto blocks = parallel_map<std::vector<long>>(detail::kSampleBlocks, jobs, [&](long b) {
        auto [lo, hi] = detail::block_range(samples, b);
        std::vector<long> counts(k_max + 2, 0);  // [1..k_max] and the tail slot
        for (long i = lo; i < hi; ++i) {
            Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(i));
            LabeledTree t;
            t.m = m;
            t.edges = detail::decode_sequence(detail::random_sequence(m, rng), m);
            auto [root, top] = detail::random_vertex_pair(m, rng);
            auto adj = detail::build_adjacency(t);
            auto stats = detail::decompose_core(t, adj, root, top, false);
            long k = stats.root_component_size;
            ++counts[k <= k_max ? k : k_max + 1];
        }
        return counts;
    });
    std::vector<long> counts(k_max + 2, 0);
    for (const auto& blk : blocks)
        for (std::size_t v = 0; v < blk.size(); ++v) counts[v] += blk[v];
    ComponentLawStats out;
    out.samples = samples;
    out.k_max = k_max;
    out.freq.assign(k_max + 1, 0.0);
    for (int k = 1; k <= k_max; ++k)
        out.freq[k] = static_cast<double>(counts[k]) / static_cast<double>(samples);
    out.tail = static_cast<double>(counts[k_max + 1]) / static_cast<double>(samples);
    double sum = 0.0, diff = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        double borel =
            std::exp((k - 1) * std::log(static_cast<double>(k)) - k - std::lgamma(k + 1.0));
        sum += borel;
        diff += std::abs(out.freq[k] - borel);
    }
    out.tv = (diff + std::abs(out.tail - (1.0 - sum))) / 2;
    return out;
}

struct TrunkLengthStats {
    double ks = 0.0;  // KS distance of trunk/sqrt(m) to the Rayleigh law
    double mean = 0.0;
    double median = 0.0;
    long samples = 0;
};

// Trunk size (vertex count of the path between the two marked vertices)
// scaled by sqrt(m), against the Rayleigh CDF 1 - e^{-x^2/2}.
inline TrunkLengthStats trunk_length_law(int m, long samples, std::uint64_t seed, int jobs = 1) {
    if (m < 2) throw std::domain_error("trunk_length_law: need m >= 2");
    if (samples < 1) throw std::invalid_argument("trunk_length_law: need samples >= 1");
    double scale = 1.0 / std::sqrt(static_cast<double>(m));
    auto blocks = parallel_map<std::vector<double>>(detail::kSampleBlocks, jobs, [&](long b) {
        auto [lo, hi] = detail::block_range(samples, b);
        std::vector<double> vals;
        vals.reserve(hi - lo);
        for (long i = lo; i < hi; ++i) {
            Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(i));
            LabeledTree t;
            t.m = m;
            t.edges = detail::decode_sequence(detail::random_sequence(m, rng), m);
            auto [root, top] = detail::random_vertex_pair(m, rng);
            auto adj = detail::build_adjacency(t);
            auto trunk = detail::trunk_path(adj, m, root, top);
            vals.push_back(static_cast<double>(trunk.size()) * scale);
        }
        return vals;
    });
    std::vector<double> vals;
    vals.reserve(samples);
    for (const auto& blk : blocks) vals.insert(vals.end(), blk.begin(), blk.end());
    TrunkLengthStats out;
    out.samples = samples;
    out.mean = sample_mean(vals);
    out.median = sample_median(vals);
    out.ks = ks_distance(vals, [](double x) {
        return x > 0.0 ? 1.0 - std::exp(-x * x / 2) : 0.0;
    });
    return out;
}

struct TrunkSplitStats {
    double ks = 0.0;  // KS distance of p/(p+q) to Uniform[0,1]
    double mean = 0.0;
    double variance = 0.0;
    long samples = 0;  // samples with d > 0, the ones the law is read from
    long skipped = 0;  // samples with d = 0 (no off-trunk trunk component)
};

inline TrunkSplitStats trunk_split_law(int m, long samples, std::uint64_t seed, int jobs = 1) {
    if (m < 3) throw std::domain_error("trunk_split_law: need m >= 3");
    if (samples < 1) throw std::invalid_argument("trunk_split_law: need samples >= 1");
    struct Block {
        std::vector<double> vals;
        long skipped = 0;
    };
    auto blocks = parallel_map<Block>(detail::kSampleBlocks, jobs, [&](long b) {
        auto [lo, hi] = detail::block_range(samples, b);
        Block blk;
        blk.vals.reserve(hi - lo);
        for (long i = lo; i < hi; ++i) {
            Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(i));
            LabeledTree t = detail::sample_tree(m, rng);
            auto [root, top] = detail::random_vertex_pair(m, rng);
            auto adj = detail::build_adjacency(t);
            auto stats = detail::decompose_core(t, adj, root, top, true);
            if (stats.d == 0)
                ++blk.skipped;
            else
                blk.vals.push_back(static_cast<double>(stats.p) / static_cast<double>(stats.d));
        }
        return blk;
    });
    std::vector<double> vals;
    vals.reserve(samples);
    long skipped = 0;
    for (const auto& blk : blocks) {
        vals.insert(vals.end(), blk.vals.begin(), blk.vals.end());
        skipped += blk.skipped;
    }
    if (vals.size() < 2) throw std::runtime_error("trunk_split_law: all samples degenerate");
    TrunkSplitStats out;
    out.samples = static_cast<long>(vals.size());
    out.skipped = skipped;
    out.mean = sample_mean(vals);
    out.variance = sample_variance(vals);
    out.ks = ks_distance(vals, [](double x) { return std::clamp(x, 0.0, 1.0); });
    return out;
}

namespace detail {

// Partial assembly sum over the cube v_i <= vmax, for truncation tests.
inline Real assembly_sum_capped(int vmax) {
    if (vmax < 1) throw std::invalid_argument("assembly_sum_capped: need vmax >= 1");
    std::vector<Real> inv(3 * vmax + 1, Real(0));  // inv[s] = 1/(s-1)!
    for (int s = 3; s <= 3 * vmax; ++s) inv[s] = Real(1) / to_real(Rat(factorial(s - 1)));
    Real sum = 0;
    for (int v1 = 1; v1 <= vmax; ++v1)
        for (int v2 = 1; v2 <= vmax; ++v2)
            for (int v3 = 1; v3 <= vmax; ++v3) sum += inv[v1 + v2 + v3];
    return sum * exp(Real(-3));
}

}  // namespace detail

// e^{-3} Σ_{v1,v2,v3 >= 1} 1/(v1+v2+v3-1)!, summed by shells s = v1+v2+v3
// with multiplicity C(s-1,2).  Consecutive shell terms shrink by 1/(s-2), so
// twice the next term bounds the tail once s >= 4.  The series evaluates to
// e^{-2}/2.
inline Real assembly_success_rate(const Real& tolerance) {
    if (!(tolerance > 0)) throw std::invalid_argument("assembly_success_rate: tolerance must be positive");
    Real prefactor = exp(Real(-3));
    Real sum = 0;
    for (int s = 3;; ++s) {
        Real term = prefactor * Real((s - 1) * (s - 2) / 2) / to_real(Rat(factorial(s - 1)));
        sum += term;
        if (s >= 4 && 2 * term / (s - 2) < tolerance) break;
    }
    return sum;
}

// Monte-Carlo estimate of (2π)^{-1/2} ∬_{p,q>0} e^{-p s1 - q s2} (p+q)^{-3/2} dp dq.
// Substituting x = p+q and a uniform split u = p/x leaves the integrand
// e^{-x c(u)} x^{-1/2} with c(u) = u s1 + (1-u) s2.  Drawing x from
// Gamma(1/2, rate c0), c0 = min(s1,s2), realized as normal()^2/(2 c0), gives
// the importance weight e^{-x (c(u)-c0)} / sqrt(2 c0), which never exceeds
// 1/sqrt(2 c0); the estimator's mean is the closed form sqrt(2)/(sqrt(s1)+sqrt(s2)).
inline double edge_factor_mc(double s1, double s2, long samples, std::uint64_t seed,
                             int jobs = 1) {
    if (!(s1 > 0.0) || !(s2 > 0.0))
        throw std::domain_error("edge_factor_mc: s1 and s2 must be positive");
    if (samples < 1) throw std::invalid_argument("edge_factor_mc: need samples >= 1");
    double c0 = std::min(s1, s2);
    auto partial = parallel_map<double>(detail::kSampleBlocks, jobs, [&](long b) {
        auto [lo, hi] = detail::block_range(samples, b);
        double acc = 0.0;
        for (long i = lo; i < hi; ++i) {
            Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(i));
            double u = rng.uniform01();
            double z = rng.normal();
            double x = z * z / (2 * c0);
            double c = u * s1 + (1.0 - u) * s2;
            acc += std::exp(-x * (c - c0));
        }
        return acc;
    });
    double total = 0.0;
    for (double a : partial) total += a;
    return total / (std::sqrt(2 * c0) * static_cast<double>(samples));
}

}  // namespace taumap
