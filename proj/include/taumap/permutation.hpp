#pragma once

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "taumap/partition.hpp"

namespace taumap {

// A permutation of {1..d}.  Composition convention, fixed once for the whole
// library: compose(p, q) applies q first, then p.  Consequently a product
// word t_1 t_2 ... t_r (as returned by product()) acts with its rightmost
// factor first, the standard convention for cycle notation; e.g. the word
// (12)(13) is the 3-cycle (1 3 2), and
// (12)(13)(24)(14)(13) is the 4-cycle (1 2 4 3).
class Permutation {
public:
    explicit Permutation(int d = 0) : img_(d) {
        std::iota(img_.begin(), img_.end(), 0);
    }

    // images listed 1-indexed: images[i-1] = image of i.
    static Permutation from_images(const std::vector<int>& images) {
        Permutation p;
        p.img_.resize(images.size());
        std::vector<bool> seen(images.size(), false);
        for (std::size_t i = 0; i < images.size(); ++i) {
            int v = images[i];
            if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
                throw std::invalid_argument("Permutation: images are not a bijection");
            seen[v - 1] = true;
            p.img_[i] = v - 1;
        }
        return p;
    }

    static Permutation transposition(int d, int a, int b) {
        if (a < 1 || b < 1 || a > d || b > d || a == b)
            throw std::invalid_argument("transposition: bad points");
        Permutation p(d);
        std::swap(p.img_[a - 1], p.img_[b - 1]);
        return p;
    }

    // Parses cycle notation, e.g. "(1 2 4 3)" or "(1 2)(3 4)"; "()" is the
    // identity.  d must be given since fixed points are omitted.
    static Permutation from_cycles(int d, const std::string& s) {
        Permutation p(d);
        std::vector<bool> used(d, false);
        std::size_t i = 0;
        while (i < s.size()) {
            if (s[i] != '(') {
                if (isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
                throw std::invalid_argument("from_cycles: expected '('");
            }
            auto close = s.find(')', i);
            if (close == std::string::npos)
                throw std::invalid_argument("from_cycles: unbalanced '('");
            std::stringstream ss(s.substr(i + 1, close - i - 1));
            std::vector<int> cyc;
            int x;
            while (ss >> x) cyc.push_back(x);
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
                if (from < 1 || from > d || to < 1 || to > d)
                    throw std::invalid_argument("from_cycles: point out of range");
                if (used[from - 1])
                    throw std::invalid_argument("from_cycles: repeated point");
                used[from - 1] = true;
                p.img_[from - 1] = to - 1;
            }
            i = close + 1;
        }
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()); }

    int apply(int x) const {
        if (x < 1 || x > degree()) throw std::out_of_range("Permutation::apply");
        return img_[x - 1] + 1;
    }

    Permutation inverse() const {
        Permutation p(degree());
        for (int i = 0; i < degree(); ++i) p.img_[img_[i]] = i;
        return p;
    }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    // All cycles, each rotated to start at its minimal point, sorted by that
    // minimal point; fixed points included as 1-cycles.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(img_.size(), false);
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            std::vector<int> c;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                c.push_back(j + 1);
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    Partition cycle_type() const {
        std::vector<int> lens;
        for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
        return Partition(std::move(lens));
    }

    // Cycle notation with fixed points omitted; identity prints "()".
    std::string to_cycle_string() const {
        std::string s;
        for (const auto& c : cycles()) {
            if (c.size() < 2) continue;
            s += "(";
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (k) s += " ";
                s += std::to_string(c[k]);
            }
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

    // (p o q)(x) = p(q(x)): q acts first.
    friend Permutation compose(const Permutation& p, const Permutation& q) {
        if (p.degree() != q.degree())
            throw std::invalid_argument("compose: degree mismatch");
        Permutation r(p.degree());
        for (int i = 0; i < p.degree(); ++i) r.img_[i] = p.img_[q.img_[i]];
        return r;
    }

private:
    std::vector<int> img_;
};

// Product of a word read left to right; the rightmost factor acts first.
inline Permutation product(const std::vector<Permutation>& word, int d) {
    Permutation acc(d);
    for (const auto& w : word) acc = compose(acc, w);
    return acc;
}

// Disjoint-set union on {0..n-1}; used for orbit/connectivity checks.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        --components_;
        return true;
    }
    int components() const { return components_; }

private:
    std::vector<int> parent_;
    int components_;
};

// True iff the group generated acts transitively on {1..d} (orbit check by
// union-find over the generators' cycles).
inline bool is_transitive(const std::vector<Permutation>& generators, int d) {
    if (d <= 0) throw std::domain_error("is_transitive: d must be positive");
    if (d == 1) return true;
    DisjointSets ds(d);
    for (const auto& g : generators) {
        if (g.degree() != d)
            throw std::invalid_argument("is_transitive: generator degree mismatch");
        for (int i = 1; i <= d; ++i) ds.unite(i - 1, g.apply(i) - 1);
    }
    return ds.components() == 1;
}

}  // namespace taumap
