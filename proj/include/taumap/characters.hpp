#pragma once

#include <map>
#include <utility>
#include <vector>

#include "taumap/partition.hpp"

namespace taumap {

// Hook length formula: dim(lambda) = d! / prod of hook lengths.
inline Int representation_dimension(const Partition& lambda) {
    const auto& parts = lambda.parts();
    int len = lambda.length();
    std::vector<int> conj(len ? parts[0] : 0, 0);
    for (int i = 0; i < len; ++i)
        for (int j = 0; j < parts[i]; ++j) ++conj[j];
    Int hooks = 1;
    for (int i = 0; i < len; ++i)
        for (int j = 0; j < parts[i]; ++j)
            hooks *= (parts[i] - j) + (conj[j] - i) - 1;
    return factorial(lambda.size()) / hooks;
}

// Sum of contents (column - row) over the cells of lambda.  This is the
// central character of the transposition class scaled by the class size:
// |C_(2,1^{d-2})| * chi^lambda(2,1^{d-2}) / dim(lambda).
inline Int content_sum(const Partition& lambda) {
    Int f = 0;
    const auto& parts = lambda.parts();
    for (int i = 0; i < lambda.length(); ++i) {
        long li = parts[i];
        f += Int(li) * (li - 1) / 2 - Int(i) * li;
    }
    return f;
}

namespace detail {

// All ways to add a border strip of s cells to lambda, with the sign
// (-1)^(height-1).  Implemented on beta-sets (first-column hook lengths):
// adding a strip moves one beta number up by s into a free slot, and the
// height defect equals the number of occupied slots jumped over.
inline std::vector<std::pair<Partition, int>> add_border_strips(const Partition& lambda,
                                                                int s) {
    int rows = lambda.length() + s;
    const auto& parts = lambda.parts();
    std::vector<long> beta(rows);
    for (int i = 0; i < rows; ++i)
        beta[i] = (i < lambda.length() ? parts[i] : 0) + (rows - 1 - i);
    std::vector<bool> occupied(beta[0] + s + 1, false);
    for (long b : beta) occupied[b] = true;

    std::vector<std::pair<Partition, int>> out;
    for (int i = 0; i < rows; ++i) {
        long from = beta[i], to = from + s;
        if (occupied[to]) continue;
        int jumped = 0;
        for (long b = from + 1; b < to; ++b)
            if (occupied[b]) ++jumped;
        std::vector<long> nb = beta;
        nb[i] = to;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> mu;
        for (int j = 0; j < rows; ++j) {
            int part = static_cast<int>(nb[j] - (rows - 1 - j));
            if (part > 0) mu.push_back(part);
        }
        out.emplace_back(Partition(std::move(mu)), (jumped % 2) ? -1 : 1);
    }
    return out;
}

}  // namespace detail

// The full character column of the class nu: every lambda |- |nu| with
// chi^lambda(nu) != 0, by a border-strip addition sweep over the parts of nu
// in increasing order (Murnaghan-Nakayama read bottom-up).  Iterating over
// the support instead of over all partitions of |nu| is what keeps short
// nu with large parts cheap.
inline std::map<Partition, Int> character_column(const Partition& nu) {
    std::map<Partition, Int> cur;
    cur.emplace(Partition(), Int(1));
    std::vector<int> asc = nu.parts();
    std::sort(asc.begin(), asc.end());
    for (int s : asc) {
        std::map<Partition, Int> next;
        for (const auto& [lambda, coeff] : cur)
            for (const auto& [mu, sign] : detail::add_border_strips(lambda, s))
                next[mu] += sign * coeff;
        for (auto it = next.begin(); it != next.end();)
            it = (it->second == 0) ? next.erase(it) : std::next(it);
        cur = std::move(next);
    }
    return cur;
}

// Single character value chi^lambda(nu) by the removal recursion; used as an
// independent cross-check of character_column.
inline Int character(const Partition& lambda, const Partition& nu) {
    if (lambda.size() != nu.size())
        throw std::invalid_argument("character: |lambda| != |nu|");
    if (lambda.empty()) return 1;
    // Remove a strip for the largest part of nu from lambda: equivalently,
    // lambda appears among the strip-additions to some smaller kappa.
    std::vector<int> rest_parts(nu.parts().begin() + 1, nu.parts().end());
    Partition rest(std::move(rest_parts));
    int s = nu.part(0);
    Int total = 0;
    for (const auto& kappa : partitions_of(lambda.size() - s)) {
        for (const auto& [mu, sign] : detail::add_border_strips(kappa, s))
            if (mu == lambda) total += sign * character(kappa, rest);
    }
    return total;
}

}  // namespace taumap
