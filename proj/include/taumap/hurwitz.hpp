#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taumap/characters.hpp"
#include "taumap/numeric.hpp"
#include "taumap/parallel.hpp"
#include "taumap/partition.hpp"
#include "taumap/permutation.hpp"

namespace taumap {

struct HurwitzQuery {
    int g = 0;
    Partition mu;
};

// r = 2g - 2 + |mu| + l(mu): the number of simple branch points forced by
// Riemann-Hurwitz for a genus-g cover of the sphere with monodromy of cycle
// type mu over infinity.
inline long riemann_hurwitz_r(int g, const Partition& mu) {
    if (g < 0) throw std::domain_error("riemann_hurwitz_r: genus must be non-negative");
    if (mu.empty()) throw std::domain_error("riemann_hurwitz_r: mu must be nonempty");
    long r = 2L * g - 2 + mu.size() + mu.length();
    if (r < 0) throw std::domain_error("riemann_hurwitz_r: infeasible query (r < 0)");
    return r;
}

// An ordered tuple of transpositions t_1, ..., t_r with t_1 ... t_r = target
// (rightmost factor applied first) whose entries generate a transitive group.
struct Factorization {
    int degree = 0;
    std::vector<std::pair<int, int>> transpositions;  // 1-indexed, first < second
    Permutation target;

    Permutation product() const {
        std::vector<Permutation> word;
        word.reserve(transpositions.size());
        for (auto [a, b] : transpositions) word.push_back(Permutation::transposition(degree, a, b));
        return taumap::product(word, degree);
    }

    bool transitive() const {
        std::vector<Permutation> gens;
        gens.reserve(transpositions.size());
        for (auto [a, b] : transpositions) gens.push_back(Permutation::transposition(degree, a, b));
        return is_transitive(gens, degree);
    }

    bool valid() const { return product() == target && transitive(); }
};

// The fixed representative of cycle type mu used throughout the enumeration:
// consecutive blocks of points, each cyclically shifted, largest part first.
inline Permutation canonical_of_type(const Partition& mu) {
    std::vector<int> img(mu.size());
    int base = 0;
    for (int p : mu.parts()) {
        for (int i = 0; i < p; ++i) img[base + i] = base + (i + 1) % p + 1;
        base += p;
    }
    return Permutation::from_images(img);
}

struct BruteOptions {
    int jobs = 1;
    // Total node budget for the whole search tree.  It is split evenly over
    // the first-transposition subtrees, so the outcome (result or budget
    // error) does not depend on the thread count.
    long long max_nodes = 4'000'000'000LL;
    int max_degree = 9;
    bool require_transitive = true;
};

namespace detail {

constexpr int kMaxBruteDegree = 12;

// Depth-first enumeration of transposition tuples with a fixed product.
// Permutations are 0-indexed image arrays here; `prefix` is t_1 ... t_k and
// `need` = prefix^{-1} * target is what the remaining factors must multiply
// to.  Each transposition changes the cycle count of `need` by exactly one,
// which gives the distance/parity prune; when the remaining length equals
// the distance, every factor must split a cycle of `need`, so branching is
// restricted to pairs inside one cycle.
struct FactorSearch {
    int d = 0;
    long r = 0;
    bool require_transitive = true;
    long long node_budget = 0;
    std::vector<std::pair<int, int>> pairs;
    std::array<int, kMaxBruteDegree> target{};
    std::array<int, kMaxBruteDegree> prefix{};
    std::array<int, kMaxBruteDegree> prefix_inv{};
    std::vector<std::pair<int, int>> chosen;
    long long nodes = 0;
    long long hits = 0;
    std::function<void(const std::vector<std::pair<int, int>>&)> sink;

    void init(const Partition& mu, long r_, const BruteOptions& opt) {
        d = mu.size();
        r = r_;
        require_transitive = opt.require_transitive;
        const Permutation t = canonical_of_type(mu);
        for (int x = 0; x < d; ++x) {
            target[x] = t.apply(x + 1) - 1;
            prefix[x] = x;
            prefix_inv[x] = x;
        }
        pairs.clear();
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) pairs.emplace_back(a, b);
        chosen.reserve(r > 0 ? r : 1);
    }

    int chosen_components(const int* cyc_order, const int* cyc_start, int ncyc) const {
        std::array<int, kMaxBruteDegree> parent;
        for (int x = 0; x < d; ++x) parent[x] = x;
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[a] = b;
        };
        for (auto [a, b] : chosen) unite(a, b);
        if (cyc_order)
            for (int c = 0; c < ncyc; ++c)
                for (int i = cyc_start[c] + 1; i < cyc_start[c + 1]; ++i)
                    unite(cyc_order[i - 1], cyc_order[i]);
        int comps = 0;
        for (int x = 0; x < d; ++x)
            if (find(x) == x) ++comps;
        return comps;
    }

    void run(long k) {
        if (++nodes > node_budget)
            throw std::runtime_error(
                "hurwitz_brute: enumeration budget exceeded; the character method handles this size");
        std::array<int, kMaxBruteDegree> need;
        for (int x = 0; x < d; ++x) need[x] = prefix_inv[target[x]];
        std::array<int, kMaxBruteDegree> cyc_order;
        std::array<int, kMaxBruteDegree + 1> cyc_start;
        int ncyc = 0, pos = 0;
        unsigned seen = 0;
        for (int x = 0; x < d; ++x) {
            if (seen & (1u << x)) continue;
            cyc_start[ncyc++] = pos;
            int y = x;
            do {
                seen |= 1u << y;
                cyc_order[pos++] = y;
                y = need[y];
            } while (y != x);
        }
        cyc_start[ncyc] = pos;
        const int dist = d - ncyc;
        const long rem = r - k;
        if (dist > rem || ((rem - dist) & 1)) return;
        if (rem == 0) {
            if (!require_transitive || chosen_components(nullptr, nullptr, 0) == 1) {
                ++hits;
                if (sink) sink(chosen);
            }
            return;
        }
        if (require_transitive) {
            // Each future factor merges at most one pair of blocks; in the
            // tight case the factors stay inside the cycles of `need`.
            if (dist == rem) {
                if (chosen_components(cyc_order.data(), cyc_start.data(), ncyc) != 1) return;
            } else if (chosen_components(nullptr, nullptr, 0) - 1 > rem) {
                return;
            }
        }
        if (dist == rem) {
            for (int c = 0; c < ncyc; ++c)
                for (int i = cyc_start[c]; i < cyc_start[c + 1]; ++i)
                    for (int j = i + 1; j < cyc_start[c + 1]; ++j) {
                        int a = cyc_order[i], b = cyc_order[j];
                        step(std::min(a, b), std::max(a, b), k);
                    }
        } else {
            for (auto [a, b] : pairs) step(a, b, k);
        }
    }

    void step(int a, int b, long k) {
        std::swap(prefix[a], prefix[b]);
        prefix_inv[prefix[a]] = a;
        prefix_inv[prefix[b]] = b;
        chosen.emplace_back(a, b);
        run(k + 1);
        chosen.pop_back();
        std::swap(prefix[a], prefix[b]);
        prefix_inv[prefix[a]] = a;
        prefix_inv[prefix[b]] = b;
    }
};

inline void check_brute_domain(const Partition& mu, long r, const BruteOptions& opt) {
    if (mu.empty()) throw std::domain_error("hurwitz_brute: mu must be nonempty");
    if (r < 0) throw std::domain_error("hurwitz_brute: negative tuple length");
    if (mu.size() > opt.max_degree || mu.size() > kMaxBruteDegree)
        throw std::runtime_error("hurwitz_brute: degree " + std::to_string(mu.size()) +
                                 " exceeds the enumeration budget; use the character method");
}

}  // namespace detail

// Number of r-tuples of transpositions in S_d with ordered product equal to
// the fixed canonical permutation of type mu (and, by default, generating a
// transitive group).
inline Int count_transposition_tuples(const Partition& mu, long r, const BruteOptions& opt = {}) {
    detail::check_brute_domain(mu, r, opt);
    const int d = mu.size();
    if (r == 0) {
        bool product_ok = (mu.length() == d);  // target is the identity iff all parts are 1
        bool transitive_ok = !opt.require_transitive || d == 1;
        return (product_ok && transitive_ok) ? 1 : 0;
    }
    if (d == 1) return 0;  // S_1 has no transpositions
    const long tasks = static_cast<long>(d) * (d - 1) / 2;
    const long long per_task = std::max<long long>(1, opt.max_nodes / tasks);
    auto counts = parallel_map<long long>(tasks, opt.jobs, [&](long i) {
        detail::FactorSearch search;
        search.init(mu, r, opt);
        search.node_budget = per_task;
        auto [a, b] = search.pairs[i];
        search.step(a, b, 0);
        return search.hits;
    });
    Int total = 0;
    for (long long c : counts) total += c;
    return total;
}

// Hur_g(mu): (number of transitive factorization tuples over all targets of
// type mu) / d!.  Counting against one fixed target and multiplying by the
// class size is equivalent; the division by d! yields the usual convention
// in which the degree-2 cover counts with multiplicity 1/2.
inline Rat hurwitz_brute(const HurwitzQuery& q, const BruteOptions& opt = {}) {
    long r = riemann_hurwitz_r(q.g, q.mu);
    BruteOptions o = opt;
    o.require_transitive = true;
    Int count = count_transposition_tuples(q.mu, r, o);
    return Rat(count * conjugacy_class_size(q.mu), factorial(q.mu.size()));
}

// Streams every transitive factorization of the canonical type-mu target in
// a fixed deterministic order (lexicographic in the tuple of chosen pairs).
template <class Fn>
void for_each_transitive_factorization(const Partition& mu, long r, Fn&& fn,
                                       const BruteOptions& opt = {}) {
    detail::check_brute_domain(mu, r, opt);
    const int d = mu.size();
    const Permutation target = canonical_of_type(mu);
    if (r == 0) {
        if (mu.length() == d && d == 1) fn(Factorization{d, {}, target});
        return;
    }
    if (d == 1) return;
    detail::FactorSearch search;
    BruteOptions o = opt;
    o.require_transitive = true;
    search.init(mu, r, o);
    search.node_budget = opt.max_nodes;
    Factorization f;
    f.degree = d;
    f.target = target;
    search.sink = [&](const std::vector<std::pair<int, int>>& chosen) {
        f.transpositions.clear();
        for (auto [a, b] : chosen) f.transpositions.emplace_back(a + 1, b + 1);
        fn(f);
    };
    for (auto [a, b] : search.pairs) search.step(a, b, 0);
}

namespace detail {

// For a conjugacy class nu |- e, the terms of the Frobenius transposition
// walk: pairs (f_lambda, sum of dim * chi over lambda with that f), where
// f_lambda is the content sum, i.e. the central character of the
// transposition class times its size.  Built once per class, shared
// read-only afterwards.
struct ColumnProfile {
    long e = 0;
    std::vector<std::pair<Int, Int>> terms;
};

inline std::shared_ptr<const ColumnProfile> column_profile(const Partition& nu) {
    static std::mutex lock;
    static std::map<Partition, std::shared_ptr<const ColumnProfile>> cache;
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = cache.find(nu);
        if (it != cache.end()) return it->second;
    }
    auto prof = std::make_shared<ColumnProfile>();
    prof->e = nu.size();
    std::map<Int, Int> by_f;
    for (const auto& [lam, chi] : character_column(nu))
        by_f[content_sum(lam)] += representation_dimension(lam) * chi;
    for (const auto& [f, w] : by_f)
        if (w != 0) prof->terms.emplace_back(f, w);
    std::lock_guard<std::mutex> guard(lock);
    return cache.emplace(nu, prof).first->second;
}

// Inclusion-exclusion engine for one query: masks index subsets of the parts
// of mu.  disconnected(S, t) counts t-tuples of transpositions in S_{e_S}
// with product one fixed permutation of type mu_S, divided by the product of
// the parts in S; connected(S, t) subtracts the splittings in which the part
// carrying the lowest index of S lands in a proper subcover, with binomial
// weights distributing the branch points.
class ConnectedCountEngine {
public:
    ConnectedCountEngine(const Partition& mu, long r) : r_(r) {
        n_ = mu.length();
        masks_.resize(1u << n_);
        for (unsigned m = 1; m < masks_.size(); ++m) {
            std::vector<int> parts;
            Int prod = 1;
            for (int i = 0; i < n_; ++i)
                if (m & (1u << i)) {
                    parts.push_back(mu.part(i));
                    prod *= mu.part(i);
                }
            masks_[m].nu = Partition(std::move(parts));
            masks_[m].part_product = prod;
        }
    }

    Rat connected(unsigned mask, long t) {
        auto key = std::make_pair(mask, t);
        auto it = conn_memo_.find(key);
        if (it != conn_memo_.end()) return it->second;
        Rat val = disconnected(mask, t);
        const unsigned low = mask & ~(mask - 1);
        for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;
            const unsigned rest = mask & ~sub;
            for (long s = 0; s <= t; ++s) {
                Rat hc = connected(sub, s);
                if (hc == 0) continue;
                Rat hd = disconnected(rest, t - s);
                if (hd == 0) continue;
                val -= Rat(binomial(t, s)) * hc * hd;
            }
        }
        conn_memo_.emplace(key, val);
        return val;
    }

    Rat disconnected(unsigned mask, long t) {
        auto& rec = masks_[mask];
        if (rec.a_table.empty()) build_a_table(rec);
        return rec.a_table[static_cast<std::size_t>(t)] / Rat(rec.part_product);
    }

private:
    struct MaskData {
        Partition nu;
        Int part_product = 1;
        std::vector<Rat> a_table;  // A_nu(t) for t = 0..r
    };

    void build_a_table(MaskData& rec) {
        auto prof = column_profile(rec.nu);
        const Int efact = factorial(prof->e);
        std::vector<Int> pw(prof->terms.size(), Int(1));
        rec.a_table.reserve(r_ + 1);
        for (long t = 0; t <= r_; ++t) {
            Int num = 0;
            for (std::size_t i = 0; i < pw.size(); ++i) {
                num += prof->terms[i].second * pw[i];
                pw[i] *= prof->terms[i].first;
            }
            rec.a_table.emplace_back(num, efact);
        }
    }

    long r_;
    int n_;
    std::vector<MaskData> masks_;
    std::map<std::pair<unsigned, long>, Rat> conn_memo_;
};

}  // namespace detail

// Number of r-tuples of transpositions in S_e whose ordered product is one
// fixed permutation of cycle type nu, connected or not: the Frobenius
// character sum (1/e!) * sum over lambda of dim * chi(nu) * f_lambda^r.
inline Int transposition_product_count(const Partition& nu, long r) {
    if (nu.empty()) throw std::domain_error("transposition_product_count: nu must be nonempty");
    if (r < 0) throw std::domain_error("transposition_product_count: negative tuple length");
    auto prof = detail::column_profile(nu);
    Int num = 0;
    for (const auto& [f, w] : prof->terms) num += w * int_pow(f, static_cast<unsigned long>(r));
    Rat a(num, factorial(prof->e));
    if (denominator(a) != 1)
        throw std::logic_error("transposition_product_count: count is not an integer");
    return numerator(a);
}

// Hur_g(mu) by the character method: Frobenius counts of possibly
// disconnected covers, then inclusion-exclusion over the splittings of the
// parts of mu into connected components, then division by |Aut mu|.
inline Rat hurwitz_characters(const HurwitzQuery& q) {
    long r = riemann_hurwitz_r(q.g, q.mu);
    detail::ConnectedCountEngine engine(q.mu, r);
    const unsigned full = (1u << q.mu.length()) - 1;
    return engine.connected(full, r) / Rat(q.mu.aut_order());
}

enum class HurwitzMethod { automatic, brute, characters };

// Dispatcher used by the CLI: brute force for small degree, characters above.
inline Rat hurwitz_number(const HurwitzQuery& q, HurwitzMethod method = HurwitzMethod::automatic,
                          int jobs = 1, int brute_cutoff = 5) {
    if (method == HurwitzMethod::automatic)
        method = q.mu.size() <= brute_cutoff ? HurwitzMethod::brute : HurwitzMethod::characters;
    if (method == HurwitzMethod::brute) {
        BruteOptions opt;
        opt.jobs = jobs;
        return hurwitz_brute(q, opt);
    }
    return hurwitz_characters(q);
}

// Classical closed form for genus 0: Hur_0(mu) = r! d^{n-3} prod mu_i^{mu_i} / mu_i!
// divided by |Aut mu|.  Used as an independent oracle in tests; for n < 3 the
// factor d^{n-3} is a genuine rational.
inline Rat hurwitz_genus0(const Partition& mu) {
    long r = riemann_hurwitz_r(0, mu);
    Rat value(factorial(r), 1);
    value *= rat_pow(Rat(mu.size()), mu.length() - 3);
    for (int p : mu.parts())
        value *= Rat(int_pow(Int(p), static_cast<unsigned long>(p)), factorial(p));
    return value / Rat(mu.aut_order());
}

}  // namespace taumap
