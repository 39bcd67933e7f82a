#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "taumap/hurwitz.hpp"
#include "taumap/kontsevich.hpp"
#include "taumap/linalg.hpp"
#include "taumap/numeric.hpp"
#include "taumap/parallel.hpp"
#include "taumap/partition.hpp"
#include "taumap/polynomial.hpp"
#include "taumap/tau_table.hpp"

namespace taumap {

// Combinatorial prefactor of the Hurwitz-to-intersection bridge:
//
//   Hur_g(mu) = r!/|Aut mu| * prod_i mu_i^{mu_i}/mu_i! * P_g(mu)
//
// where r = 2g - 2 + |mu| + l(mu) and P_g is a polynomial in the parts.
inline Rat elsv_prefactor(int g, const Partition& mu) {
    long r = riemann_hurwitz_r(g, mu);
    Rat pre = Rat(factorial(r), mu.aut_order());
    for (int part : mu.parts())
        pre *= Rat(int_pow(Int(part), static_cast<unsigned long>(part)), factorial(part));
    return pre;
}

// Exact Hurwitz-number supplier used by the fit; defaults to the automatic
// brute-force/character dispatch.
using HurwitzSource = std::function<Rat(int g, const Partition& mu)>;

inline HurwitzSource default_hurwitz_source(int jobs = 1) {
    return [jobs](int g, const Partition& mu) {
        return hurwitz_number({g, mu}, HurwitzMethod::automatic, jobs);
    };
}

// The polynomial P_g(mu_1..mu_n) recovered from Hurwitz data.  Its top-degree
// part carries the psi-class intersections; each step down in degree flips
// the sign and inserts the next Hodge class.
struct ElsvPolynomial {
    int g = 0;
    int n = 0;
    Polynomial poly;  // in variables mu_1..mu_n
};

struct ElsvFitOptions {
    int first_part = 1;   // parts are drawn from {first_part, first_part+1, ...}
    int held_out = 3;     // extra distinct-part partitions checked after the fit
    int jobs = 1;
};

namespace detail {

// Distinct-part candidate partitions with n parts >= first, streamed in
// order of increasing largest part.  Every call with the same arguments
// yields the same deterministic sequence.
inline std::vector<Partition> distinct_part_candidates(int n, int first, int count) {
    std::vector<Partition> out;
    for (int top = first + n - 1; static_cast<int>(out.size()) < count; ++top) {
        // choose the n-1 smaller parts from {first, ..., top-1}
        std::vector<int> idx(static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n - 1; ++i) idx[static_cast<std::size_t>(i)] = first + i;
        auto emit = [&] {
            std::vector<int> parts(idx.begin(), idx.end());
            parts.push_back(top);
            std::sort(parts.rbegin(), parts.rend());
            out.emplace_back(parts);
        };
        if (n == 1) {
            out.emplace_back(std::vector<int>{top});
            continue;
        }
        for (;;) {
            emit();
            if (static_cast<int>(out.size()) == count) break;
            int i = n - 2;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == top - (n - 1 - i)) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n - 1; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

// All exponent vectors of length n with total degree <= max_deg, graded lex.
inline std::vector<std::vector<int>> monomials_up_to(int max_deg, int n) {
    std::vector<std::vector<int>> out;
    for (int d = 0; d <= max_deg; ++d)
        for (auto& k : taumap::compositions(d, n)) out.push_back(std::move(k));
    return out;
}

inline std::vector<Rat> monomial_row(const std::vector<std::vector<int>>& monomials,
                                     const Partition& mu) {
    std::vector<Rat> row;
    row.reserve(monomials.size());
    for (const auto& e : monomials) {
        Rat v = 1;
        for (std::size_t i = 0; i < e.size(); ++i)
            v *= rat_pow(Rat(mu.parts()[i]), e[i]);
        row.push_back(v);
    }
    return row;
}

}  // namespace detail

// Fits P_g over exact Hurwitz samples: selects partitions with n distinct
// parts until the interpolation system has full rank, solves it exactly,
// asserts that only total degrees 3g-3+n-j (0 <= j <= g) carry coefficients,
// and re-checks the polynomial at held-out partitions including ones with
// repeated parts, where the |Aut mu| factor of the prefactor matters.
inline ElsvPolynomial elsv_fit(int g, int n, const HurwitzSource& source,
                               const ElsvFitOptions& opt = {}) {
    if (g < 0 || n < 1 || 2 * g - 2 + n < 1)
        throw std::domain_error("elsv_fit: (g,n) must be stable");
    if (opt.first_part < 1) throw std::invalid_argument("elsv_fit: first_part must be positive");
    int max_deg = 3 * g - 3 + n;
    std::vector<std::vector<int>> monomials = detail::monomials_up_to(max_deg, n);
    std::size_t unknowns = monomials.size();

    // Phase 1: pick a full-rank sample grid.  Rows are cheap; Hurwitz values
    // are only computed for partitions that actually enter the system.
    RowBasis basis(unknowns);
    std::vector<Partition> grid;
    std::vector<std::vector<Rat>> rows;
    int pool = static_cast<int>(unknowns) + opt.held_out + 8;
    std::vector<Partition> candidates = detail::distinct_part_candidates(n, opt.first_part, pool);
    std::size_t cursor = 0;
    while (!basis.full()) {
        if (cursor == candidates.size()) {
            pool *= 2;
            candidates = detail::distinct_part_candidates(n, opt.first_part, pool);
            if (pool > 1 << 20)
                throw std::logic_error("elsv_fit: sampling grid failed to reach full rank");
        }
        const Partition& mu = candidates[cursor++];
        std::vector<Rat> row = detail::monomial_row(monomials, mu);
        if (basis.try_add(row)) {
            grid.push_back(mu);
            rows.push_back(std::move(row));
        }
    }

    // Phase 2: exact Hurwitz values for the grid, in parallel.
    auto value_at = [&](const Partition& mu) {
        return source(g, mu) / elsv_prefactor(g, mu);
    };
    std::vector<Rat> values = parallel_map<Rat>(
        static_cast<long>(grid.size()), opt.jobs,
        [&](long i) { return value_at(grid[static_cast<std::size_t>(i)]); });

    std::vector<Rat> coeffs = solve_linear_system(rows, values);

    ElsvPolynomial fit{g, n, Polynomial(n)};
    for (std::size_t i = 0; i < unknowns; ++i) {
        if (coeffs[i] == 0) continue;
        long deg = 0;
        for (int e : monomials[i]) deg += e;
        if (deg < max_deg - g)
            throw std::logic_error(
                "elsv_fit: nonzero coefficient at a forbidden total degree; Hurwitz data is "
                "inconsistent with the polynomial structure");
        fit.poly.add_term(monomials[i], coeffs[i]);
    }

    // Phase 3: held-out checks.  Fresh distinct-part partitions, plus
    // repeated-part ones when n allows them.
    std::vector<Partition> held;
    for (std::size_t i = cursor; i < candidates.size() && held.size() < static_cast<std::size_t>(opt.held_out); ++i)
        held.push_back(candidates[i]);
    if (n >= 2) {
        std::vector<int> parts;
        for (int i = 0; i < n - 1; ++i) parts.push_back(opt.first_part + i);
        parts.push_back(opt.first_part);  // duplicate the smallest part
        std::sort(parts.rbegin(), parts.rend());
        held.emplace_back(parts);
        for (int& p : parts) p += 1;  // shifted copy, still with a repeat
        held.emplace_back(parts);
    }
    std::vector<Rat> held_values = parallel_map<Rat>(
        static_cast<long>(held.size()), opt.jobs,
        [&](long i) { return value_at(held[static_cast<std::size_t>(i)]); });
    for (std::size_t i = 0; i < held.size(); ++i) {
        std::vector<Rat> point;
        for (int part : held[i].parts()) point.emplace_back(part);
        if (fit.poly.evaluate(point) != held_values[i])
            throw std::logic_error(
                "elsv_fit: held-out Hurwitz value disagrees with the fitted polynomial");
    }
    return fit;
}

inline ElsvPolynomial elsv_fit(int g, int n, const ElsvFitOptions& opt = {}) {
    return elsv_fit(g, n, default_hurwitz_source(opt.jobs), opt);
}

// Top-degree coefficients are pure psi-intersections.
inline TauTable tau_from_elsv(const ElsvPolynomial& fit) {
    TauTable table;
    long top = 3 * fit.g - 3 + fit.n;
    for (const auto& [e, c] : fit.poly.terms()) {
        long deg = 0;
        for (int x : e) deg += x;
        if (deg == top) table.set(fit.g, e, c);
    }
    return table;
}

// Lower degrees carry Hodge classes: the coefficient block at total degree
// 3g-3+n-j equals (-1)^j <lambda_j tau_{k_1} ... tau_{k_n}>.  Genus zero has
// no lambda classes, so its table is empty.
inline HodgeTable hodge_from_elsv(const ElsvPolynomial& fit) {
    HodgeTable table;
    long top = 3 * fit.g - 3 + fit.n;
    for (const auto& [e, c] : fit.poly.terms()) {
        long deg = 0;
        for (int x : e) deg += x;
        long j = top - deg;
        if (j < 1) continue;
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        table.set(fit.g, static_cast<int>(j), e, sign * c);
    }
    return table;
}

// The change of variables z_i = sqrt(2 s_i) linking the Laplace-transformed
// Hurwitz asymptotics to the graph-sum variables; reporting only, hence
// high-precision decimals rather than exact values.
inline std::vector<Real> laplace_variable_map(const std::vector<Rat>& s) {
    std::vector<Real> z;
    z.reserve(s.size());
    for (const Rat& v : s) {
        if (v <= 0) throw std::domain_error("laplace_variable_map: arguments must be positive");
        z.push_back(sqrt(Real(2) * to_real(v)));
    }
    return z;
}

}  // namespace taumap
