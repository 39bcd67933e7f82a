#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "taumap/numeric.hpp"

namespace taumap {

// A partition: weakly decreasing list of positive integers.  The empty
// partition (of 0) is allowed.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
        std::sort(parts_.rbegin(), parts_.rend());
    }

    static Partition parse(const std::string& s) {
        std::vector<int> parts;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            parts.push_back(std::stoi(tok));
        }
        return Partition(std::move(parts));
    }

    // |mu|
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    // l(mu)
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_.at(i); }
    const std::vector<int>& parts() const { return parts_; }

    // Multiplicity of the value k among the parts.
    int multiplicity(int k) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
    }

    // |Aut mu| = product over distinct part values of (multiplicity!).
    Int aut_order() const {
        Int a = 1;
        for (std::size_t i = 0; i < parts_.size();) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            a *= factorial(static_cast<long>(j - i));
            i = j;
        }
        return a;
    }

    // Centralizer order z_mu = prod k^{m_k} m_k!; the conjugacy class of
    // type mu in S_d has size d!/z_mu.
    Int centralizer_order() const {
        Int z = aut_order();
        for (int p : parts_) z *= p;
        return z;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> parts_;
};

inline Int conjugacy_class_size(const Partition& mu) {
    return factorial(mu.size()) / mu.centralizer_order();
}

// All partitions of d, first part largest, in reverse-lexicographic order:
// (d), (d-1,1), ..., (1^d).
inline std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::domain_error("partitions_of: negative d");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (int k = std::min(rem, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(rem - k, k);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

// All vectors of n non-negative integers summing to m, in lexicographic
// order.  These index monomials of fixed total degree throughout the
// interpolation code.
inline std::vector<std::vector<int>> compositions(int m, int n) {
    std::vector<std::vector<int>> out;
    if (n <= 0 || m < 0) return out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, m);
    return out;
}

}  // namespace taumap
