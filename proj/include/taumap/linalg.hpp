#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "taumap/numeric.hpp"

namespace taumap {

namespace detail {

// Clears denominators row by row so elimination can run over the integers.
inline std::vector<std::vector<Int>> integer_rows(const std::vector<std::vector<Rat>>& a,
                                                  const std::vector<Rat>& b) {
    std::size_t n = a.size();
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw std::invalid_argument("solve_linear_system: matrix is not square");
        Int scale = 1;
        for (const Rat& x : a[i]) scale = lcm(scale, denominator(x));
        scale = lcm(scale, denominator(b[i]));
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = numerator(a[i][j]) * (scale / denominator(a[i][j]));
        m[i][n] = numerator(b[i]) * (scale / denominator(b[i]));
    }
    return m;
}

}  // namespace detail

// Solves A x = b exactly over the rationals using fraction-free (Bareiss)
// elimination: every division during the sweep is exact over the integers,
// which keeps intermediate entries near the size of the final minors.
// Throws std::invalid_argument when A is singular or dimensions disagree.
inline std::vector<Rat> solve_linear_system(const std::vector<std::vector<Rat>>& a,
                                            const std::vector<Rat>& b) {
    std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve_linear_system: rhs length mismatch");
    if (n == 0) return {};
    auto m = detail::integer_rows(a, b);

    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) throw std::invalid_argument("solve_linear_system: singular matrix");
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    std::vector<Rat> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rat acc(m[k][n]);
        for (std::size_t j = k + 1; j < n; ++j) acc -= Rat(m[k][j]) * x[j];
        x[k] = acc / Rat(m[k][k]);
    }
    return x;
}

// Incremental basis of row vectors over the rationals.  Used to grow a
// sampling grid one candidate at a time until the interpolation system has
// full rank: try_add reduces the candidate against the rows kept so far and
// keeps it only when something nonzero survives.
class RowBasis {
public:
    explicit RowBasis(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == cols_; }

    bool try_add(std::vector<Rat> row) {
        if (row.size() != cols_)
            throw std::invalid_argument("RowBasis: wrong row length");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rat& lead = row[pivots_[r]];
            if (lead == 0) continue;
            Rat f = lead;  // basis rows are normalized to pivot 1
            for (std::size_t j = 0; j < cols_; ++j) row[j] -= f * rows_[r][j];
        }
        std::size_t p = 0;
        while (p < cols_ && row[p] == 0) ++p;
        if (p == cols_) return false;
        Rat inv = row[p];
        for (std::size_t j = 0; j < cols_; ++j) row[j] /= inv;
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
        return true;
    }

private:
    std::size_t cols_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace taumap
