#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace taumap {

// Kolmogorov-Smirnov distance between the empirical law of a sample and a
// continuous reference CDF: the usual sup over both one-sided gaps at the
// order statistics.
inline double ks_distance(std::vector<double> sample,
                          const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_distance: empty sample");
    std::sort(sample.begin(), sample.end());
    double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double f = cdf(sample[i]);
        d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - f));
        d = std::max(d, std::abs(static_cast<double>(i) / n - f));
    }
    return d;
}

// Total-variation distance between two discrete laws given as probability
// vectors over 0, 1, 2, ...; indices beyond either vector carry zero mass,
// so the caller should extend the reference law until its tail is
// negligible.
inline double tv_distance(const std::vector<double>& a, const std::vector<double>& b) {
    std::size_t len = std::max(a.size(), b.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        double x = i < a.size() ? a[i] : 0.0;
        double y = i < b.size() ? b[i] : 0.0;
        sum += std::abs(x - y);
    }
    return sum / 2;
}

// Pearson chi-square goodness-of-fit p-value for observed counts against a
// fully specified discrete law (degrees of freedom = bins - 1).
inline double chi_square_pvalue(const std::vector<long>& observed,
                                const std::vector<double>& expected_prob) {
    if (observed.size() != expected_prob.size() || observed.size() < 2)
        throw std::invalid_argument("chi_square_pvalue: need matching bins, at least two");
    long total = 0;
    for (long c : observed) {
        if (c < 0) throw std::invalid_argument("chi_square_pvalue: negative count");
        total += c;
    }
    if (total == 0) throw std::invalid_argument("chi_square_pvalue: empty sample");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double expect = static_cast<double>(total) * expected_prob[i];
        if (expect <= 0.0)
            throw std::invalid_argument("chi_square_pvalue: expected bin probability not positive");
        double diff = static_cast<double>(observed[i]) - expect;
        stat += diff * diff / expect;
    }
    boost::math::chi_squared dist(static_cast<double>(observed.size() - 1));
    return boost::math::cdf(boost::math::complement(dist, stat));
}

inline double sample_mean(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("sample_mean: empty sample");
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double sample_variance(const std::vector<double>& v) {
    if (v.size() < 2) throw std::invalid_argument("sample_variance: need two points");
    double m = sample_mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

inline double sample_median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("sample_median: empty sample");
    std::sort(v.begin(), v.end());
    std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

}  // namespace taumap
