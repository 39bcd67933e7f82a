#pragma once

#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "taumap/hurwitz.hpp"
#include "taumap/numeric.hpp"
#include "taumap/partition.hpp"
#include "taumap/tau_table.hpp"

namespace taumap {

// The limit density of normalized Hurwitz numbers at scaled profile x:
//
//   H_g(x) = (2 pi)^{-n/2} sum_{k_1+...+k_n = 3g-3+n} <tau_k> prod x_i^{k_i - 1/2}
//
// with intersection numbers looked up in the supplied table.  The unstable
// cases (0,1) and (0,2) fall outside the table's range and use their known
// closed forms instead: x^{-5/2}/sqrt(2 pi) and (2 pi sqrt(x1 x2) (x1+x2))^{-1}.
inline Real asymptotic_H(int g, const std::vector<Rat>& x, const TauTable& table) {
    int n = static_cast<int>(x.size());
    if (g < 0 || n < 1) throw std::domain_error("asymptotic_H: invalid (g,n)");
    for (const Rat& v : x)
        if (v <= 0) throw std::domain_error("asymptotic_H: x must be positive");
    const Real two_pi = boost::math::constants::two_pi<Real>();
    if (g == 0 && n == 1) return pow(to_real(x[0]), Real(-2.5)) / sqrt(two_pi);
    if (g == 0 && n == 2) {
        Real x1 = to_real(x[0]), x2 = to_real(x[1]);
        return 1 / (two_pi * sqrt(x1 * x2) * (x1 + x2));
    }
    int m = 3 * g - 3 + n;
    if (m < 0) throw std::domain_error("asymptotic_H: no admissible exponents");
    Real sum = 0;
    for (const auto& k : compositions(m, n)) {
        auto tau = table.get(g, k);
        if (!tau)
            throw std::invalid_argument("asymptotic_H: TauTable lacks " + detail::tau_name(g, k));
        Real term = to_real(*tau);
        for (int i = 0; i < n; ++i)
            term *= pow(to_real(x[static_cast<std::size_t>(i)]),
                        Real(k[static_cast<std::size_t>(i)]) - Real(0.5));
        sum += term;
    }
    return sum / pow(two_pi, Real(n) / 2);
}

// Finite-N probe of the Hurwitz asymptotics: evaluates
//
//   [Hur_g(mu) / (e^{|mu|} r!)] * N^{-((3g-3) + n/2)} / H_g(x)
//
// at mu_i = round(N x_i).  The derivation assumes |Aut mu| = 1, so rounded
// parts must be pairwise distinct.  The ratio drifts toward 1 as N grows;
// e^{|mu|} is the only transcendental ingredient and is carried in 50-digit
// floating point.
inline Real asymptotic_ratio(int g, const std::vector<Rat>& x, long N, const TauTable& table,
                             int jobs = 1) {
    int n = static_cast<int>(x.size());
    if (N < 1) throw std::domain_error("asymptotic_ratio: N must be positive");
    if (n < 1) throw std::domain_error("asymptotic_ratio: empty profile");
    std::vector<int> parts;
    for (const Rat& v : x) {
        if (v <= 0) throw std::domain_error("asymptotic_ratio: x must be positive");
        Rat scaled = Rat(N) * v;
        Int rounded = (2 * numerator(scaled) + denominator(scaled)) / (2 * denominator(scaled));
        if (rounded < 1)
            throw std::domain_error("asymptotic_ratio: a part rounds to zero; N is too small");
        parts.push_back(static_cast<int>(rounded));
    }
    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::domain_error("asymptotic_ratio: rounded parts must be pairwise distinct");

    Partition mu(parts);
    long r = riemann_hurwitz_r(g, mu);
    Rat hur = hurwitz_number({g, mu}, HurwitzMethod::automatic, jobs);
    Real scaled = to_real(hur) / (exp(Real(mu.size())) * Real(factorial(r)));
    Real npow = pow(Real(N), -(Real(3 * g - 3) + Real(n) / 2));
    return scaled * npow / asymptotic_H(g, x, table);
}

}  // namespace taumap
