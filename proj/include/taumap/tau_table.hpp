#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "taumap/numeric.hpp"

namespace taumap {

namespace detail {

inline std::string tau_name(int g, const std::vector<int>& k) {
    std::ostringstream out;
    out << "<";
    for (int v : k) out << "tau_" << v << " ";
    out << ">_" << g;
    return out.str();
}

}  // namespace detail

// Report-facing bracket names.  Exponents are shown sorted, matching the
// canonical key order of the tables.
inline std::string tau_display(int g, std::vector<int> k) {
    std::sort(k.begin(), k.end());
    std::ostringstream out;
    out << "⟨";
    for (std::size_t i = 0; i < k.size(); ++i) out << (i ? " τ_" : "τ_") << k[i];
    out << "⟩_" << g;
    return out.str();
}

inline std::string hodge_display(int g, int j, std::vector<int> k) {
    std::sort(k.begin(), k.end());
    std::ostringstream out;
    out << "⟨λ_" << j;
    for (int v : k) out << " τ_" << v;
    out << "⟩_" << g;
    return out.str();
}

// Intersection numbers <tau_{k_1} ... tau_{k_n}>_g, keyed by genus and the
// sorted exponent vector.  An entry is admissible only when the dimension
// constraint sum(k) = 3g-3+n holds; inserting a value that conflicts with a
// stored one throws, so the table doubles as a cross-pipeline consistency
// check when two independent computations feed it.
class TauTable {
public:
    struct Key {
        int g = 0;
        std::vector<int> k;
        auto operator<=>(const Key&) const = default;
    };

    static std::vector<int> sorted(std::vector<int> k) {
        std::sort(k.begin(), k.end());
        return k;
    }

    static void check_admissible(int g, const std::vector<int>& k) {
        if (g < 0) throw std::invalid_argument("TauTable: negative genus");
        if (k.empty()) throw std::invalid_argument("TauTable: empty index");
        long sum = 0;
        for (int v : k) {
            if (v < 0) throw std::invalid_argument("TauTable: negative exponent");
            sum += v;
        }
        long n = static_cast<long>(k.size());
        if (sum != 3 * g - 3 + n)
            throw std::invalid_argument("TauTable: dimension constraint violated for " +
                                        detail::tau_name(g, k));
    }

    void set(int g, std::vector<int> k, const Rat& value) {
        check_admissible(g, k);
        Key key{g, sorted(std::move(k))};
        auto [it, fresh] = entries_.emplace(std::move(key), value);
        if (!fresh && it->second != value)
            throw std::logic_error("TauTable: conflicting values for " +
                                   detail::tau_name(it->first.g, it->first.k) + ": " +
                                   rational_string(it->second) + " vs " +
                                   rational_string(value));
    }

    std::optional<Rat> get(int g, std::vector<int> k) const {
        auto it = entries_.find(Key{g, sorted(std::move(k))});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(int g, std::vector<int> k) const { return get(g, std::move(k)).has_value(); }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::map<Key, Rat>& entries() const { return entries_; }

    // Inserts every entry of the other table, throwing on any exact-value
    // disagreement.
    void merge(const TauTable& other) {
        for (const auto& [key, value] : other.entries_) set(key.g, key.k, value);
    }

private:
    std::map<Key, Rat> entries_;
};

// Hodge-twisted integrals <lambda_j tau_{k_1} ... tau_{k_n}>_g.  The lambda
// class drops the dimension by j, so admissibility is sum(k) = 3g-3+n-j with
// 0 <= j <= g.
class HodgeTable {
public:
    struct Key {
        int g = 0;
        int j = 0;
        std::vector<int> k;
        auto operator<=>(const Key&) const = default;
    };

    static void check_admissible(int g, int j, const std::vector<int>& k) {
        if (g < 0) throw std::invalid_argument("HodgeTable: negative genus");
        if (j < 0 || j > g) throw std::invalid_argument("HodgeTable: lambda index out of range");
        if (k.empty()) throw std::invalid_argument("HodgeTable: empty index");
        long sum = 0;
        for (int v : k) {
            if (v < 0) throw std::invalid_argument("HodgeTable: negative exponent");
            sum += v;
        }
        long n = static_cast<long>(k.size());
        if (sum != 3 * g - 3 + n - j)
            throw std::invalid_argument("HodgeTable: dimension constraint violated");
    }

    void set(int g, int j, std::vector<int> k, const Rat& value) {
        check_admissible(g, j, k);
        Key key{g, j, TauTable::sorted(std::move(k))};
        auto [it, fresh] = entries_.emplace(std::move(key), value);
        if (!fresh && it->second != value)
            throw std::logic_error("HodgeTable: conflicting values for an entry: " +
                                   rational_string(it->second) + " vs " +
                                   rational_string(value));
    }

    std::optional<Rat> get(int g, int j, std::vector<int> k) const {
        auto it = entries_.find(Key{g, j, TauTable::sorted(std::move(k))});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::map<Key, Rat>& entries() const { return entries_; }

private:
    std::map<Key, Rat> entries_;
};

}  // namespace taumap
