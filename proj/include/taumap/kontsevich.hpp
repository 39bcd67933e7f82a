#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taumap/linalg.hpp"
#include "taumap/numeric.hpp"
#include "taumap/polynomial.hpp"
#include "taumap/ribbon.hpp"
#include "taumap/rng.hpp"
#include "taumap/tau_table.hpp"

namespace taumap {

// Odd double factorial m!! = m(m-2)...1, with (-1)!! = 1 for the k = 0 case.
inline Int double_factorial(long m) {
    if (m < -1 || m % 2 == 0)
        throw std::domain_error("double_factorial: argument must be odd and >= -1");
    Int f = 1;
    for (long i = m; i >= 3; i -= 2) f *= i;
    return f;
}

// A finite sum of simple fractions c / prod (z_i + z_j)^e, the shape produced
// by summing trivalent-map contributions.  The denominator stays in factored
// form; numerator() and denominator() materialize polynomials over the common
// denominator only on demand, since large sums are consumed by exact
// evaluation instead.
class RationalFunction {
public:
    // Factor key (i, j) with 1 <= i <= j <= nvars stands for (z_i + z_j);
    // the diagonal (i, i) is z_i + z_i = 2 z_i.
    using Factors = std::map<std::pair<int, int>, int>;

    explicit RationalFunction(int nvars) : nvars_(nvars) {
        if (nvars <= 0) throw std::domain_error("RationalFunction: need at least one variable");
    }

    static RationalFunction simple(int nvars, const Rat& coeff, Factors factors) {
        RationalFunction f(nvars);
        f.add_simple(coeff, std::move(factors));
        return f;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Factors, Rat>& terms() const { return terms_; }

    void add_simple(const Rat& coeff, Factors factors) {
        if (coeff == 0) return;
        Factors canon;
        for (auto [pair, mult] : factors) {
            auto [i, j] = pair;
            if (i > j) std::swap(i, j);
            if (i < 1 || j > nvars_)
                throw std::invalid_argument("RationalFunction: factor index out of range");
            if (mult < 0) throw std::invalid_argument("RationalFunction: negative multiplicity");
            if (mult > 0) canon[{i, j}] += mult;
        }
        auto [it, fresh] = terms_.emplace(std::move(canon), coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    RationalFunction& operator+=(const RationalFunction& o) {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("RationalFunction: mixed variable counts");
        for (const auto& [f, c] : o.terms_) add_simple(c, f);
        return *this;
    }
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
        return a += b;
    }
    RationalFunction& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [f, c] : terms_) c *= s;
        }
        return *this;
    }

    Rat evaluate(const std::vector<Rat>& z) const {
        if (static_cast<int>(z.size()) != nvars_)
            throw std::invalid_argument("RationalFunction::evaluate: wrong point dimension");
        Rat total = 0;
        for (const auto& [factors, coeff] : terms_) {
            Rat den = 1;
            for (const auto& [pair, mult] : factors) {
                Rat base = z[static_cast<std::size_t>(pair.first - 1)] +
                           z[static_cast<std::size_t>(pair.second - 1)];
                if (base == 0)
                    throw std::domain_error("RationalFunction::evaluate: point on a pole");
                den *= rat_pow(base, mult);
            }
            total += coeff / den;
        }
        return total;
    }

    // Least common denominator over all terms: pairwise maxima of the factor
    // multiplicities.
    Factors common_denominator() const {
        Factors common;
        for (const auto& [factors, coeff] : terms_)
            for (const auto& [pair, mult] : factors) {
                int& e = common[pair];
                e = std::max(e, mult);
            }
        return common;
    }

    Polynomial denominator() const {
        Polynomial den = Polynomial::constant(nvars_, 1);
        for (const auto& [pair, mult] : common_denominator())
            den = den * factor_poly(pair).pow(mult);
        return den;
    }

    Polynomial numerator() const {
        Factors common = common_denominator();
        Polynomial num(nvars_);
        for (const auto& [factors, coeff] : terms_) {
            Polynomial part = Polynomial::constant(nvars_, coeff);
            for (const auto& [pair, mult] : common) {
                auto it = factors.find(pair);
                int deficit = mult - (it == factors.end() ? 0 : it->second);
                if (deficit > 0) part = part * factor_poly(pair).pow(deficit);
            }
            num += part;
        }
        return num;
    }

    // Equality as rational functions, decided by exact cross-multiplication;
    // neither side needs to be in lowest terms.
    bool equals(const RationalFunction& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("RationalFunction: mixed variable counts");
        return numerator() * o.denominator() == o.numerator() * denominator();
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [factors, coeff] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << rational_string(coeff);
            for (const auto& [pair, mult] : factors) {
                out << "/(z" << pair.first << "+z" << pair.second << ")";
                if (mult > 1) out << "^" << mult;
            }
        }
        return out.str();
    }

private:
    Polynomial factor_poly(const std::pair<int, int>& pair) const {
        return Polynomial::variable(nvars_, pair.first - 1) +
               Polynomial::variable(nvars_, pair.second - 1);
    }

    int nvars_;
    std::map<Factors, Rat> terms_;
};

namespace detail {

inline std::vector<Int> first_primes(int count) {
    std::vector<Int> primes;
    for (long c = 2; static_cast<int>(primes.size()) < count; ++c) {
        bool composite = false;
        for (long p = 2; p * p <= c; ++p)
            if (c % p == 0) {
                composite = true;
                break;
            }
        if (!composite) primes.emplace_back(c);
    }
    return primes;
}

}  // namespace detail

// The weighted sum over trivalent ribbon-graph classes with n labeled faces:
//
//   K_{g,n}(z) = 2^{2g-2+n} * sum_G (1/|Aut G|) * prod_edges 1/(z_a + z_b)
//
// where a, b are the labels of the two faces along the edge (a = b when the
// same face runs along both sides).
inline RationalFunction kontsevich_sum(int g, int n, int jobs = 1) {
    if (g < 0 || n < 1 || 2 * g - 2 + n < 1)
        throw std::domain_error("kontsevich_sum: (g,n) must be stable");
    std::vector<TrivalentClass> classes = enumerate_trivalent_maps(g, n, jobs);
    RationalFunction sum(n);
    for (const TrivalentClass& cls : classes) {
        RationalFunction::Factors factors;
        for (const auto& [a, b] : edge_face_labels(cls.graph))
            factors[std::minmax(a, b)] += 1;
        sum.add_simple(Rat(1, cls.aut_order), std::move(factors));
    }
    sum *= Rat(int_pow(Int(2), static_cast<unsigned long>(2 * g - 2 + n)));
    return sum;
}

// Reads intersection numbers off K_{g,n} through the expansion
//
//   K_{g,n}(z) = sum_k <tau_{k_1} ... tau_{k_n}> prod_i (2k_i - 1)!! / z_i^{2k_i+1}
//
// over compositions k of 3g-3+n.  The coefficients are recovered by exact
// interpolation: evaluating at z_i = p_i^(t+1) for distinct primes p_i makes
// the collocation matrix a Vandermonde in the pairwise-distinct monomial
// values prod p_i^-(2k_i+1), hence provably nonsingular.  The interpolant is
// then re-checked against K at fresh geometric and random rational points;
// any mismatch means K is not the expected polynomial in 1/z_i and aborts.
inline TauTable expand_and_extract(const RationalFunction& K, int g, int n) {
    if (static_cast<int>(K.nvars()) != n)
        throw std::invalid_argument("expand_and_extract: variable count mismatch");
    if (g < 0 || n < 1 || 2 * g - 2 + n < 1)
        throw std::domain_error("expand_and_extract: (g,n) must be stable");
    int m = 3 * g - 3 + n;
    std::vector<std::vector<int>> comps = compositions(m, n);
    std::size_t N = comps.size();
    std::vector<Int> primes = detail::first_primes(n);

    auto geometric_point = [&](long t) {
        std::vector<Rat> z(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            z[static_cast<std::size_t>(i)] =
                Rat(int_pow(primes[static_cast<std::size_t>(i)], static_cast<unsigned long>(t)));
        return z;
    };
    auto monomial_row = [&](const std::vector<Rat>& z) {
        std::vector<Rat> row;
        row.reserve(N);
        for (const auto& k : comps) {
            Rat v = 1;
            for (int i = 0; i < n; ++i)
                v *= rat_pow(z[static_cast<std::size_t>(i)],
                             -(2L * k[static_cast<std::size_t>(i)] + 1));
            row.push_back(v);
        }
        return row;
    };

    std::vector<std::vector<Rat>> matrix;
    std::vector<Rat> rhs;
    for (std::size_t t = 1; t <= N; ++t) {
        std::vector<Rat> z = geometric_point(static_cast<long>(t));
        matrix.push_back(monomial_row(z));
        rhs.push_back(K.evaluate(z));
    }
    std::vector<Rat> coeffs = solve_linear_system(matrix, rhs);

    auto check_point = [&](const std::vector<Rat>& z) {
        std::vector<Rat> row = monomial_row(z);
        Rat interp = 0;
        for (std::size_t i = 0; i < N; ++i) interp += coeffs[i] * row[i];
        if (interp != K.evaluate(z))
            throw std::logic_error(
                "expand_and_extract: non-polynomial residue; the graph sum does not match "
                "its expected 1/z expansion (enumeration inconsistency)");
    };
    check_point(geometric_point(static_cast<long>(N) + 1));
    check_point(geometric_point(static_cast<long>(N) + 2));
    Rng rng(0x7A75C0DEULL);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rat> z(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            z[static_cast<std::size_t>(i)] =
                Rat(1 + static_cast<long>(rng.below(1000)), 1 + static_cast<long>(rng.below(40)));
        check_point(z);
    }

    TauTable table;
    for (std::size_t idx = 0; idx < N; ++idx) {
        Rat norm = 1;
        for (int ki : comps[idx]) norm *= Rat(double_factorial(2L * ki - 1));
        // TauTable::set rejects conflicting values, so the symmetry of the
        // coefficients across compositions of the same multiset is enforced
        // here as a side effect.
        table.set(g, comps[idx], coeffs[idx] / norm);
    }
    return table;
}

struct StringViolation {
    int g = 0;
    std::vector<int> k;  // the full index of the left-hand entry, sorted
    Rat lhs;
    Rat rhs;
};

// Checks every applicable instance of the string equation
//
//   <tau_0 tau_{k_1} ... tau_{k_{n-1}}>_g = sum_j <tau_{k_j - 1} prod_{i != j} tau_{k_i}>_g
//
// within the table.  Instances whose right-hand entries are not all present
// are skipped; only exact mismatches are reported.
inline std::vector<StringViolation> string_equation_check(const TauTable& table) {
    std::vector<StringViolation> violations;
    for (const auto& [key, lhs] : table.entries()) {
        const std::vector<int>& k = key.k;  // sorted ascending
        long n = static_cast<long>(k.size());
        if (k.front() != 0) continue;                    // no tau_0 on the left
        if (2 * key.g - 2 + (n - 1) <= 0) continue;      // lowered table is unstable
        std::vector<int> rest(k.begin() + 1, k.end());   // remove one tau_0
        Rat rhs = 0;
        bool complete = true;
        for (std::size_t j = 0; j < rest.size() && complete; ++j) {
            if (rest[j] == 0) continue;  // tau_{-1} terms vanish
            std::vector<int> lowered = rest;
            lowered[j] -= 1;
            if (auto v = table.get(key.g, lowered))
                rhs += *v;
            else
                complete = false;
        }
        if (!complete) continue;
        if (lhs != rhs) violations.push_back({key.g, k, lhs, rhs});
    }
    return violations;
}

}  // namespace taumap
