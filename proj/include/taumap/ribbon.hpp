#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "taumap/hurwitz.hpp"
#include "taumap/parallel.hpp"
#include "taumap/partition.hpp"
#include "taumap/permutation.hpp"

namespace taumap {

// A connected graph embedded in an oriented surface, encoded by its darts
// (half-edges): sigma rotates the darts counterclockwise around their vertex,
// alpha swaps the two darts of each edge.  Vertices are the cycles of sigma,
// edges the cycles of alpha, faces the cycles of sigma*alpha.
struct RibbonGraph {
    int num_darts = 0;
    Permutation sigma;
    Permutation alpha;
    // Optional face labeling, stored per dart and constant on each face
    // cycle; empty when the faces are unlabeled.
    std::map<int, int> face_labels;

    bool labeled() const { return !face_labels.empty(); }
};

inline std::vector<std::vector<int>> faces(const RibbonGraph& rg) {
    if (rg.num_darts == 0) return {};
    return compose(rg.sigma, rg.alpha).cycles();
}

inline void validate_ribbon_graph(const RibbonGraph& rg) {
    if (rg.num_darts < 0 || rg.num_darts % 2 != 0)
        throw std::invalid_argument("ribbon graph: dart count must be even");
    if (rg.sigma.degree() != rg.num_darts || rg.alpha.degree() != rg.num_darts)
        throw std::invalid_argument("ribbon graph: permutation degree mismatch");
    for (int x = 1; x <= rg.num_darts; ++x) {
        if (rg.alpha.apply(x) == x || rg.alpha.apply(rg.alpha.apply(x)) != x)
            throw std::invalid_argument("ribbon graph: alpha must be a fixed-point-free involution");
    }
    if (rg.num_darts > 0 && !is_transitive({rg.sigma, rg.alpha}, rg.num_darts))
        throw std::invalid_argument("ribbon graph: disconnected");
    if (!rg.face_labels.empty()) {
        if (static_cast<int>(rg.face_labels.size()) != rg.num_darts)
            throw std::invalid_argument("ribbon graph: face labels must cover every dart");
        auto fcs = faces(rg);
        std::set<int> seen;
        for (const auto& fc : fcs) {
            int label = rg.face_labels.at(fc[0]);
            for (int dart : fc)
                if (rg.face_labels.at(dart) != label)
                    throw std::invalid_argument("ribbon graph: face label not constant on a face");
            if (!seen.insert(label).second)
                throw std::invalid_argument("ribbon graph: duplicate face label");
        }
        int n = static_cast<int>(fcs.size());
        if (seen.empty() || *seen.begin() != 1 || *seen.rbegin() != n)
            throw std::invalid_argument("ribbon graph: face labels must be 1..n");
    }
}

// Euler genus: V - E + F = 2 - 2g.  A graph with no darts is a lone vertex
// on the sphere.
inline int genus(const RibbonGraph& rg) {
    if (rg.num_darts == 0) return 0;
    if (!is_transitive({rg.sigma, rg.alpha}, rg.num_darts))
        throw std::invalid_argument("genus: disconnected ribbon graph");
    const long v = static_cast<long>(rg.sigma.cycles().size());
    const long e = rg.num_darts / 2;
    const long f = static_cast<long>(faces(rg).size());
    const long defect = 2 - v + e - f;
    if (defect < 0 || defect % 2 != 0)
        throw std::invalid_argument("genus: malformed ribbon graph (odd or negative Euler defect)");
    return static_cast<int>(defect / 2);
}

namespace detail {

// Canonical dart relabeling: breadth-first traversal from `start`, visiting
// sigma then alpha images, encoded as the concatenated image tables (and the
// per-dart face labels when present).  The canonical encoding is the minimum
// over all starting darts; isomorphic graphs produce identical encodings.
inline std::vector<int> dart_encoding(int num_darts, const int* sigma, const int* alpha,
                                      const int* label, int start, std::vector<int>& newlab,
                                      std::vector<int>& order) {
    newlab.assign(num_darts, -1);
    order.clear();
    order.push_back(start);
    newlab[start] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
        int x = order[h];
        for (int y : {sigma[x], alpha[x]}) {
            if (newlab[y] < 0) {
                newlab[y] = static_cast<int>(order.size());
                order.push_back(y);
            }
        }
    }
    if (static_cast<int>(order.size()) != num_darts)
        throw std::invalid_argument("canonical_form: disconnected ribbon graph");
    std::vector<int> enc;
    enc.reserve(label ? 3 * num_darts : 2 * num_darts);
    for (int i = 0; i < num_darts; ++i) enc.push_back(newlab[sigma[order[i]]] + 1);
    for (int i = 0; i < num_darts; ++i) enc.push_back(newlab[alpha[order[i]]] + 1);
    if (label)
        for (int i = 0; i < num_darts; ++i) enc.push_back(label[order[i]]);
    return enc;
}

inline std::vector<int> minimal_dart_encoding(int num_darts, const int* sigma, const int* alpha,
                                              const int* label) {
    std::vector<int> best, newlab, order;
    for (int s = 0; s < num_darts; ++s) {
        auto enc = dart_encoding(num_darts, sigma, alpha, label, s, newlab, order);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

inline RibbonGraph graph_from_encoding(int num_darts, const std::vector<int>& enc, bool labeled) {
    RibbonGraph rg;
    rg.num_darts = num_darts;
    rg.sigma = Permutation::from_images({enc.begin(), enc.begin() + num_darts});
    rg.alpha = Permutation::from_images({enc.begin() + num_darts, enc.begin() + 2 * num_darts});
    if (labeled)
        for (int i = 0; i < num_darts; ++i) rg.face_labels[i + 1] = enc[2 * num_darts + i];
    return rg;
}

inline std::vector<int> encoding_of(const RibbonGraph& rg) {
    std::vector<int> sigma(rg.num_darts), alpha(rg.num_darts), label;
    for (int x = 0; x < rg.num_darts; ++x) {
        sigma[x] = rg.sigma.apply(x + 1) - 1;
        alpha[x] = rg.alpha.apply(x + 1) - 1;
    }
    if (rg.labeled()) {
        label.resize(rg.num_darts);
        for (int x = 0; x < rg.num_darts; ++x) label[x] = rg.face_labels.at(x + 1);
    }
    return minimal_dart_encoding(rg.num_darts, sigma.data(), alpha.data(),
                                 label.empty() ? nullptr : label.data());
}

}  // namespace detail

// Relabels the darts to the lexicographically minimal encoding over all
// breadth-first starts; isomorphic graphs (face labels included) map to the
// identical result.  Idempotent.
inline RibbonGraph canonical_form(const RibbonGraph& rg) {
    if (rg.num_darts == 0) return rg;
    auto enc = detail::encoding_of(rg);
    return detail::graph_from_encoding(rg.num_darts, enc, rg.labeled());
}

// Number of dart bijections commuting with sigma and alpha and preserving
// the face labels.  On a connected graph such a map is determined by the
// image of one dart, so the count is at most num_darts.
inline long automorphism_order(const RibbonGraph& rg) {
    if (rg.num_darts == 0) return 1;
    if (!rg.labeled())
        throw std::invalid_argument("automorphism_order: face labels required");
    const int D = rg.num_darts;
    std::vector<int> sigma(D), alpha(D), label(D);
    for (int x = 0; x < D; ++x) {
        sigma[x] = rg.sigma.apply(x + 1) - 1;
        alpha[x] = rg.alpha.apply(x + 1) - 1;
        label[x] = rg.face_labels.at(x + 1);
    }
    std::vector<int> order;
    {
        std::vector<int> newlab(D, -1);
        order.push_back(0);
        newlab[0] = 0;
        for (std::size_t h = 0; h < order.size(); ++h)
            for (int y : {sigma[order[h]], alpha[order[h]]})
                if (newlab[y] < 0) {
                    newlab[y] = 1;
                    order.push_back(y);
                }
        if (static_cast<int>(order.size()) != D)
            throw std::invalid_argument("automorphism_order: disconnected ribbon graph");
    }
    long count = 0;
    std::vector<int> phi(D);
    std::vector<char> defined(D);
    for (int c = 0; c < D; ++c) {
        std::fill(defined.begin(), defined.end(), 0);
        phi[0] = c;
        defined[0] = 1;
        bool ok = true;
        for (std::size_t h = 0; h < order.size() && ok; ++h) {
            int x = order[h];
            int y = phi[x];
            for (auto [nx, ny] : {std::pair{sigma[x], sigma[y]}, std::pair{alpha[x], alpha[y]}}) {
                if (!defined[nx]) {
                    phi[nx] = ny;
                    defined[nx] = 1;
                } else if (phi[nx] != ny) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<char> hit(D, 0);
        for (int x = 0; x < D && ok; ++x) {
            if (hit[phi[x]]) ok = false;
            hit[phi[x]] = 1;
            if (label[phi[x]] != label[x]) ok = false;
        }
        if (ok) ++count;
    }
    return count;
}

// For each edge {d, alpha(d)} of a face-labeled graph, the labels of the two
// faces it borders (equal labels for an edge with the same face on both
// sides).  Ordered by the smaller dart of the edge.
inline std::vector<std::pair<int, int>> edge_face_labels(const RibbonGraph& rg) {
    if (!rg.labeled()) throw std::invalid_argument("edge_face_labels: face labels required");
    std::vector<std::pair<int, int>> out;
    for (int d = 1; d <= rg.num_darts; ++d) {
        int e = rg.alpha.apply(d);
        if (d < e) out.emplace_back(rg.face_labels.at(d), rg.face_labels.at(e));
    }
    return out;
}

struct TrivalentClass {
    RibbonGraph graph;  // canonical form, faces labeled 1..n
    long aut_order = 1;
};

struct TrivalentEnumeration {
    std::vector<TrivalentClass> classes;
    // Count of raw dart structures (fixed sigma, enumerated alpha) that are
    // connected with exactly n faces, before any quotient by isomorphism.
    long long raw_dart_structures = 0;
};

namespace detail {

template <class Fn>
void enumerate_pairings(std::vector<int>& alpha, int num_darts, Fn&& emit) {
    int first = -1;
    for (int x = 0; x < num_darts; ++x)
        if (alpha[x] < 0) {
            first = x;
            break;
        }
    if (first < 0) {
        emit();
        return;
    }
    for (int y = first + 1; y < num_darts; ++y) {
        if (alpha[y] >= 0) continue;
        alpha[first] = y;
        alpha[y] = first;
        enumerate_pairings(alpha, num_darts, emit);
        alpha[first] = -1;
        alpha[y] = -1;
    }
}

}  // namespace detail

// All isomorphism classes of connected trivalent maps of genus g with n
// labeled faces: fix the rotation system sigma = (1 2 3)(4 5 6)..., run over
// the fixed-point-free pairings alpha, keep those with n faces (the genus is
// then forced by Euler's relation), and deduplicate by canonical encoding,
// first without labels and then over all n! face labelings.
inline TrivalentEnumeration enumerate_trivalent_maps_detailed(int g, int n, int jobs = 1) {
    if (g < 0 || n < 1 || 2 * g - 2 + n < 1)
        throw std::domain_error("enumerate_trivalent_maps: (g,n) outside the stable range");
    const int E = 6 * g - 6 + 3 * n;
    const int D = 2 * E;
    if (D > 20)
        throw std::runtime_error("enumerate_trivalent_maps: " + std::to_string(D) +
                                 " darts is beyond the enumeration budget");
    std::vector<int> sigma(D);
    for (int v = 0; v < D / 3; ++v)
        for (int i = 0; i < 3; ++i) sigma[3 * v + i] = 3 * v + (i + 1) % 3;
    // Union-find base with the vertex triples pre-merged.
    std::vector<int> base(D);
    for (int x = 0; x < D; ++x) base[x] = 3 * (x / 3);

    struct TaskResult {
        std::set<std::vector<int>> encodings;
        long long raw = 0;
    };
    auto results = parallel_map<TaskResult>(D - 1, jobs, [&](long task) {
        TaskResult res;
        std::vector<int> alpha(D, -1);
        alpha[0] = static_cast<int>(task) + 1;
        alpha[task + 1] = 0;
        std::vector<int> parent(D);
        detail::enumerate_pairings(alpha, D, [&] {
            // face count
            unsigned long long visited = 0;
            int fcount = 0;
            for (int x = 0; x < D; ++x) {
                if (visited >> x & 1) continue;
                ++fcount;
                int y = x;
                do {
                    visited |= 1ULL << y;
                    y = sigma[alpha[y]];
                } while (y != x);
            }
            if (fcount != n) return;
            // connectivity
            parent = base;
            auto find = [&](int x) {
                while (parent[x] != x) {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                return x;
            };
            int comps = D / 3;
            for (int x = 0; x < D; ++x) {
                int a = find(x), b = find(alpha[x]);
                if (a != b) {
                    parent[a] = b;
                    --comps;
                }
            }
            if (comps != 1) return;
            ++res.raw;
            res.encodings.insert(
                detail::minimal_dart_encoding(D, sigma.data(), alpha.data(), nullptr));
        });
        return res;
    });

    std::set<std::vector<int>> unlabeled;
    TrivalentEnumeration out;
    for (auto& r : results) {
        out.raw_dart_structures += r.raw;
        unlabeled.merge(r.encodings);
    }

    std::set<std::vector<int>> labeled;
    for (const auto& enc : unlabeled) {
        RibbonGraph rep = detail::graph_from_encoding(D, enc, false);
        auto fcs = faces(rep);
        std::vector<int> sig(D), alp(D), lab(D);
        for (int x = 0; x < D; ++x) {
            sig[x] = rep.sigma.apply(x + 1) - 1;
            alp[x] = rep.alpha.apply(x + 1) - 1;
        }
        std::vector<int> assignment(n);
        for (int i = 0; i < n; ++i) assignment[i] = i + 1;
        do {
            for (int i = 0; i < n; ++i)
                for (int dart : fcs[i]) lab[dart - 1] = assignment[i];
            labeled.insert(detail::minimal_dart_encoding(D, sig.data(), alp.data(), lab.data()));
        } while (std::next_permutation(assignment.begin(), assignment.end()));
    }

    for (const auto& enc : labeled) {
        TrivalentClass cls;
        cls.graph = detail::graph_from_encoding(D, enc, true);
        cls.aut_order = automorphism_order(cls.graph);
        out.classes.push_back(std::move(cls));
    }
    return out;
}

inline std::vector<TrivalentClass> enumerate_trivalent_maps(int g, int n, int jobs = 1) {
    return enumerate_trivalent_maps_detailed(g, n, jobs).classes;
}

// The branching graph of a transitive transposition factorization: one
// vertex per sheet, one edge per transposition, labeled by its position in
// the word (standing for the r-th roots of unity); the rotation at a vertex
// lists the incident edges by increasing label.  Darts 2k-1 and 2k form the
// edge of t_k, placed at its smaller and larger moved sheet respectively.
struct LabeledBranchingGraph {
    RibbonGraph graph;
    int num_labels = 0;           // r
    int degree = 0;               // number of sheets
    std::vector<int> sheet_of_dart;  // sheet carrying each dart, 1-indexed

    int edge_label(int dart) const { return (dart + 1) / 2; }
};

inline LabeledBranchingGraph branching_graph_from_factorization(const Factorization& f) {
    if (!f.transitive())
        throw std::invalid_argument(
            "branching_graph_from_factorization: factorization is not transitive");
    if (f.product() != f.target)
        throw std::invalid_argument(
            "branching_graph_from_factorization: word does not multiply to the target");
    const int d = f.degree;
    const int r = static_cast<int>(f.transpositions.size());
    LabeledBranchingGraph b;
    b.num_labels = r;
    b.degree = d;
    b.graph.num_darts = 2 * r;
    b.sheet_of_dart.assign(2 * r + 1, 0);
    std::vector<std::vector<int>> at_vertex(d + 1);
    for (int k = 1; k <= r; ++k) {
        auto [a, bb] = f.transpositions[k - 1];
        at_vertex[a].push_back(2 * k - 1);
        at_vertex[bb].push_back(2 * k);
        b.sheet_of_dart[2 * k - 1] = a;
        b.sheet_of_dart[2 * k] = bb;
    }
    std::vector<int> sig(2 * r + 1), alp(2 * r + 1);
    for (int v = 1; v <= d; ++v) {
        const auto& darts = at_vertex[v];  // already sorted by label
        for (std::size_t i = 0; i < darts.size(); ++i)
            sig[darts[i]] = darts[(i + 1) % darts.size()];
    }
    for (int k = 1; k <= r; ++k) {
        alp[2 * k - 1] = 2 * k;
        alp[2 * k] = 2 * k - 1;
    }
    if (r > 0) {
        b.graph.sigma = Permutation::from_images({sig.begin() + 1, sig.end()});
        b.graph.alpha = Permutation::from_images({alp.begin() + 1, alp.end()});
        int label = 0;
        for (const auto& fc : faces(b.graph)) {
            ++label;
            for (int dart : fc) b.graph.face_labels[dart] = label;
        }
    }
    return b;
}

// Face perimeters: along each face, the corner between consecutive edge
// labels a -> b spans ((b - a) mod r) r-ths of a full turn, with 0 read as a
// full turn; the perimeter is the total number of turns.  The multiset of
// perimeters recovers the cycle type of the target.
inline Partition face_perimeters(const LabeledBranchingGraph& b) {
    if (b.num_labels == 0) {
        // Degree-1 identity cover: a lone vertex on the sphere, one face.
        return Partition({1});
    }
    const int r = b.num_labels;
    std::vector<int> parts;
    Permutation phi = compose(b.graph.sigma, b.graph.alpha);
    for (const auto& fc : faces(b.graph)) {
        long total = 0;
        for (int dart : fc) {
            int a = b.edge_label(dart);
            int bb = b.edge_label(phi.apply(dart));
            int step = ((bb - a) % r + r) % r;
            total += step == 0 ? r : step;
        }
        if (total % r != 0)
            throw std::invalid_argument("face_perimeters: corner angles do not close up");
        parts.push_back(static_cast<int>(total / r));
    }
    return Partition(std::move(parts));
}

// A reduced ribbon graph with every vertex of valence >= 3, in canonical
// form with labeled faces.
struct HomotopyType {
    RibbonGraph graph;
};

enum class DegenerateShape { point, circle };

using HomotopyOutcome = std::variant<HomotopyType, DegenerateShape>;

// Deletes valence-1 vertices (with their edge) until none remain, then
// smooths out valence-2 vertices, preserving the faces and their labels.
// Branching graphs with (g,n) = (0,1) or (0,2) collapse entirely, to a point
// or a circle.
inline HomotopyOutcome homotopy_type(const LabeledBranchingGraph& b) {
    std::map<int, int> sig, alp, lab;
    for (int x = 1; x <= b.graph.num_darts; ++x) {
        sig[x] = b.graph.sigma.apply(x);
        alp[x] = b.graph.alpha.apply(x);
        lab[x] = b.graph.face_labels.at(x);
    }
    auto splice_out = [&](int x) {
        // remove dart x from its sigma cycle
        int p = x;
        while (sig.at(p) != x) p = sig.at(p);
        if (p == x)
            sig.erase(x);
        else {
            sig[p] = sig.at(x);
            sig.erase(x);
        }
        lab.erase(x);
    };
    // Phase 1: prune valence-1 vertices, lowest dart first.
    for (;;) {
        int found = 0;
        for (const auto& [x, sx] : sig)
            if (sx == x) {
                found = x;
                break;
            }
        if (!found) break;
        int y = alp.at(found);
        splice_out(found);
        splice_out(y);
        alp.erase(found);
        alp.erase(y);
    }
    if (sig.empty()) return DegenerateShape::point;
    // Phase 2: smooth valence-2 vertices.
    for (;;) {
        int found = 0;
        for (const auto& [x, sx] : sig)
            if (sx != x && sig.at(sx) == x) {
                found = x;
                break;
            }
        if (!found) break;
        int z = sig.at(found);
        if (alp.at(found) == z) {
            // the vertex's two darts close a free circle
            if (sig.size() != 2)
                throw std::logic_error("homotopy_type: circle component in a larger graph");
            return DegenerateShape::circle;
        }
        int u = alp.at(found), w = alp.at(z);
        alp[u] = w;
        alp[w] = u;
        alp.erase(found);
        alp.erase(z);
        splice_out(found);
        splice_out(z);
    }
    // Rebuild with compact dart ids.
    std::map<int, int> newid;
    for (const auto& [x, sx] : sig) newid[x] = static_cast<int>(newid.size()) + 1;
    const int D = static_cast<int>(newid.size());
    std::vector<int> sv(D), av(D);
    RibbonGraph out;
    out.num_darts = D;
    for (const auto& [x, id] : newid) {
        sv[id - 1] = newid.at(sig.at(x));
        av[id - 1] = newid.at(alp.at(x));
        out.face_labels[id] = lab.at(x);
    }
    out.sigma = Permutation::from_images(sv);
    out.alpha = Permutation::from_images(av);
    return HomotopyType{canonical_form(out)};
}

}  // namespace taumap
