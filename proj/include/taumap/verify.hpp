#pragma once

// Cross-pipeline verification driver.  Each check recomputes one quantity
// two independent ways, or against a closed form, and records expected vs
// got as strings so reports need no further formatting logic.  The core
// suite is exact arithmetic throughout; the asymptotic suite is Monte Carlo
// with the seeds, scales, and tolerances pinned in config.hpp.

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "taumap/asymptotics.hpp"
#include "taumap/cache.hpp"
#include "taumap/config.hpp"
#include "taumap/elsv.hpp"
#include "taumap/hurwitz.hpp"
#include "taumap/kontsevich.hpp"
#include "taumap/numeric.hpp"
#include "taumap/partition.hpp"
#include "taumap/ribbon.hpp"
#include "taumap/tau_table.hpp"
#include "taumap/trees.hpp"

namespace taumap {

struct CheckResult {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
};

inline bool all_pass(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace detail {

inline std::string fmt(double v) {
    std::ostringstream out;
    out << std::setprecision(6) << v;
    return out.str();
}

inline CheckResult exact_check(std::string name, const Rat& expected, const Rat& got) {
    return {std::move(name), rational_string(expected), rational_string(got), expected == got};
}

inline CheckResult count_check(std::string name, long long expected, long long got) {
    return {std::move(name), std::to_string(expected), std::to_string(got), expected == got};
}

inline CheckResult yes_check(std::string name, bool ok, std::string no_detail = "no") {
    return {std::move(name), "yes", ok ? "yes" : std::move(no_detail), ok};
}

// pass when statistic <= bound
inline CheckResult bound_check(std::string name, double statistic, double bound) {
    return {std::move(name), "<= " + fmt(bound), fmt(statistic), statistic <= bound};
}

// pass when |got - expected| <= tol
inline CheckResult near_check(std::string name, double expected, double got, double tol) {
    return {std::move(name), fmt(expected) + " ± " + fmt(tol), fmt(got),
            std::fabs(got - expected) <= tol};
}

}  // namespace detail

// Every (g, mu) with |mu| <= max_size whose branch-point count
// r = 2g - 2 + |mu| + l(mu) stays within max_r.  Since r >= 2g, the genus
// loop terminates on its own.
inline std::vector<HurwitzQuery> hurwitz_grid(int max_size, long max_r) {
    std::vector<HurwitzQuery> out;
    for (int d = 1; d <= max_size; ++d)
        for (const Partition& mu : partitions_of(d))
            for (int g = 0;; ++g) {
                long r = 2L * g - 2 + mu.size() + mu.length();
                if (r > max_r) break;
                out.push_back({g, mu});
            }
    return out;
}

// Exact identities: closed-form graph sums, tau anchors, the string
// equation, Kontsevich vs ELSV tables, Hurwitz anchors by both methods, the
// Hodge block of the (1,1) fit, branching-graph perimeters and genus, and
// the tree-count identities.
inline std::vector<CheckResult> verify_core(int jobs = 1) {
    std::vector<CheckResult> out;

    {
        auto en03 = enumerate_trivalent_maps_detailed(0, 3, jobs);
        out.push_back(detail::count_check("trivalent classes (0,3)", 4,
                                          static_cast<long long>(en03.classes.size())));
        RationalFunction ref03(3);
        ref03.add_simple(Rat(8), {{{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, 1}});
        out.push_back(detail::yes_check("K(0,3) = 1/(z1 z2 z3)",
                                        kontsevich_sum(0, 3, jobs).equals(ref03)));

        auto en11 = enumerate_trivalent_maps_detailed(1, 1, jobs);
        out.push_back(detail::count_check("trivalent classes (1,1)", 1,
                                          static_cast<long long>(en11.classes.size())));
        out.push_back(detail::count_check("(1,1) automorphism order", 6,
                                          en11.classes.size() == 1 ? en11.classes[0].aut_order
                                                                   : -1));
        RationalFunction ref11(1);
        ref11.add_simple(Rat(1, 3), {{{1, 1}, 3}});
        out.push_back(detail::yes_check("K(1,1) = 1/(24 z1^3)",
                                        kontsevich_sum(1, 1, jobs).equals(ref11)));
    }

    const std::vector<std::pair<int, int>> stable = {{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}};
    TauTable merged;
    std::map<std::pair<int, int>, TauTable> graph_tables;
    for (auto [g, n] : stable) {
        TauTable t = expand_and_extract(kontsevich_sum(g, n, jobs), g, n);
        merged.merge(t);
        graph_tables.emplace(std::make_pair(g, n), std::move(t));
    }
    auto anchor = [&](int g, std::vector<int> k, const Rat& expected) {
        Rat got = merged.get(g, k).value_or(Rat(0));
        out.push_back(detail::exact_check(tau_display(g, std::move(k)), expected, got));
    };
    anchor(0, {0, 0, 0}, Rat(1));
    anchor(1, {1}, Rat(1, 24));
    anchor(0, {1, 0, 0, 0}, Rat(1));
    out.push_back(detail::count_check(
        "string equation violations", 0,
        static_cast<long long>(string_equation_check(merged).size())));

    std::map<std::pair<int, int>, ElsvPolynomial> fits;
    for (auto [g, n] : stable) {
        ElsvFitOptions opt;
        opt.jobs = jobs;
        fits.emplace(std::make_pair(g, n), elsv_fit(g, n, opt));
    }
    for (auto [g, n] : stable) {
        TauTable from_elsv = tau_from_elsv(fits.at({g, n}));
        const TauTable& from_graphs = graph_tables.at({g, n});
        bool equal = true;
        for (const auto& [key, value] : from_graphs.entries())
            if (from_elsv.get(key.g, key.k).value_or(Rat(0)) != value) equal = false;
        for (const auto& [key, value] : from_elsv.entries())
            if (!from_graphs.contains(key.g, key.k)) equal = false;
        std::ostringstream name;
        name << "Kontsevich = ELSV table (" << g << "," << n << ")";
        out.push_back(detail::yes_check(name.str(), equal, "tables differ"));
    }

    {
        const ElsvPolynomial& fit = fits.at({1, 1});
        Rat constant = 0;
        auto it = fit.poly.terms().find(std::vector<int>{0});
        if (it != fit.poly.terms().end()) constant = it->second;
        out.push_back(detail::exact_check("(1,1) ELSV fit constant term", Rat(-1, 24), constant));
        HodgeTable hodge = hodge_from_elsv(fit);
        out.push_back(detail::exact_check(hodge_display(1, 1, {0}), Rat(1, 24),
                                          hodge.get(1, 1, {0}).value_or(Rat(0))));
        bool no_lambda = hodge_from_elsv(fits.at({0, 3})).empty() &&
                         hodge_from_elsv(fits.at({0, 4})).empty() &&
                         hodge_from_elsv(fits.at({0, 5})).empty();
        out.push_back(detail::yes_check("genus-0 fits carry no λ block", no_lambda));
    }

    {
        struct Anchor {
            int g;
            Partition mu;
            Rat expected;
        };
        const std::vector<Anchor> anchors = {{0, Partition({2}), Rat(1, 2)},
                                             {0, Partition({3}), Rat(1)},
                                             {0, Partition({1, 1, 1}), Rat(4)},
                                             {1, Partition({2}), Rat(1, 2)},
                                             {1, Partition({1}), Rat(0)}};
        BruteOptions opt;
        opt.jobs = jobs;
        for (const Anchor& a : anchors) {
            std::string base = "Hur_" + std::to_string(a.g) + "(" + a.mu.to_string() + ")";
            out.push_back(
                detail::exact_check(base + " brute", a.expected, hurwitz_brute({a.g, a.mu}, opt)));
            out.push_back(detail::exact_check(base + " characters", a.expected,
                                              hurwitz_characters({a.g, a.mu})));
        }

        int mismatches = 0, comparisons = 0;
        for (const HurwitzQuery& q : hurwitz_grid(4, 8)) {
            ++comparisons;
            if (hurwitz_brute(q, opt) != hurwitz_characters(q)) ++mismatches;
        }
        out.push_back({"brute = characters (|mu| <= 4, r <= 8)", "0 mismatches",
                       std::to_string(mismatches) + " mismatches in " +
                           std::to_string(comparisons) + " comparisons",
                       mismatches == 0});
    }

    {
        long long checked = 0, bad_perimeter = 0, bad_genus = 0;
        for (int d = 1; d <= 4; ++d)
            for (const Partition& mu : partitions_of(d))
                for (int g = 0; g <= 1; ++g) {
                    long r = riemann_hurwitz_r(g, mu);
                    for_each_transitive_factorization(mu, r, [&](const Factorization& f) {
                        ++checked;
                        LabeledBranchingGraph b = branching_graph_from_factorization(f);
                        if (!(face_perimeters(b) == mu)) ++bad_perimeter;
                        int got_genus = b.graph.num_darts > 0 ? genus(b.graph) : 0;
                        if (got_genus != g) ++bad_genus;
                    });
                }
        std::string over = " over " + std::to_string(checked) + " factorizations";
        out.push_back({"face perimeters recover mu (g <= 1, |mu| <= 4)", "0 mismatches",
                       std::to_string(bad_perimeter) + " mismatches" + over, bad_perimeter == 0});
        out.push_back({"branching genus = Riemann-Hurwitz genus (g <= 1, |mu| <= 4)",
                       "0 mismatches", std::to_string(bad_genus) + " mismatches" + over,
                       bad_genus == 0});
    }

    {
        Factorization f;
        f.degree = 4;
        f.transpositions = {{1, 2}, {1, 3}, {2, 4}, {1, 4}, {1, 3}};
        f.target = Permutation::from_cycles(4, "(1 2 4 3)");
        out.push_back(detail::yes_check("(12)(13)(24)(14)(13) factors (1 2 4 3) transitively",
                                        f.valid()));
        LabeledBranchingGraph b = branching_graph_from_factorization(f);
        out.push_back(detail::count_check("its branching graph genus", 1, genus(b.graph)));
        Partition per = face_perimeters(b);
        out.push_back({"its face perimeters", "4", per.to_string(), per == Partition({4})});
    }

    {
        bool identity = true;
        for (int m = 2; m <= 7; ++m) identity = identity && cayley_identity_check(m);
        out.push_back(detail::yes_check("Cayley valence identity, m = 2..7", identity));
        bool totals = true;
        for (int m = 1; m <= 8; ++m) {
            Int expected = m == 1 ? Int(1) : int_pow(Int(m), static_cast<unsigned long>(m - 2));
            totals = totals && count_labeled_trees_direct(m) == expected;
        }
        out.push_back(detail::yes_check("labeled tree totals m^(m-2), m = 1..8", totals));
    }

    return out;
}

// Monte-Carlo suite at the pinned scales, plus the finite-N Hurwitz ratio
// probe.  Deterministic for a fixed seed.
inline std::vector<CheckResult> verify_asymptotic(std::uint64_t seed = config::default_seed,
                                                  int jobs = 1) {
    std::vector<CheckResult> out;

    ValenceHistogram vh = valence_histogram(config::valence_m, config::valence_samples, seed, jobs);
    out.push_back(
        detail::bound_check("valence TV to shifted Poisson", vh.tv, config::valence_tv_max));

    ComponentLawStats cl =
        root_component_law(config::borel_m, config::borel_samples, seed, config::borel_k_max, jobs);
    out.push_back(detail::bound_check("root-component TV to Borel", cl.tv, config::borel_tv_max));

    TrunkLengthStats tl =
        trunk_length_law(config::rayleigh_m, config::rayleigh_samples, seed, jobs);
    out.push_back(detail::bound_check("trunk/sqrt(m) KS to Rayleigh", tl.ks,
                                      config::rayleigh_ks_max));
    out.push_back(detail::near_check("trunk/sqrt(m) mean", std::sqrt(std::acos(-1.0) / 2),
                                     tl.mean, 0.02));
    out.push_back(detail::near_check("trunk/sqrt(m) median", std::sqrt(2 * std::log(2.0)),
                                     tl.median, 0.02));

    TrunkSplitStats ts = trunk_split_law(config::split_m, config::split_samples, seed, jobs);
    out.push_back(detail::bound_check("trunk split KS to Uniform[0,1]", ts.ks,
                                      config::split_ks_max));
    out.push_back(detail::near_check("trunk split mean", 0.5, ts.mean, 0.01));
    out.push_back(detail::near_check("trunk split variance", 1.0 / 12.0, ts.variance, 0.005));

    auto edge_point = [&](double s1, double s2) {
        double expected = std::sqrt(2.0) / (std::sqrt(s1) + std::sqrt(s2));
        double got = edge_factor_mc(s1, s2, config::edge_factor_samples, seed, jobs);
        std::ostringstream name;
        name << "edge factor at (" << s1 << ", " << s2 << ")";
        out.push_back(detail::near_check(name.str(), expected, got,
                                         config::edge_factor_rel_max * expected));
    };
    edge_point(0.5, 0.5);
    edge_point(2.0, 2.0);
    edge_point(1.0, 1.0);
    edge_point(1.0, 4.0);
    edge_point(9.0, 0.25);

    double assembly = static_cast<double>(assembly_success_rate(Real(config::assembly_tolerance)));
    out.push_back(detail::near_check("assembly success rate = e^-2/2", std::exp(-2.0) / 2,
                                     assembly, config::assembly_abs_max));

    TauTable unused;  // both probe profiles sit in the closed-form range
    for (const auto& x : {std::vector<Rat>{Rat(1)}, std::vector<Rat>{Rat(1), Rat(2)}}) {
        std::vector<double> errs;
        for (long N : {5L, 10L, 15L, 20L})
            errs.push_back(std::fabs(
                static_cast<double>(asymptotic_ratio(0, x, N, unused, jobs)) - 1.0));
        std::string profile = x.size() == 1 ? "x = (1)" : "x = (1,2)";
        bool monotone = errs[0] > errs[1] && errs[1] > errs[2] && errs[2] > errs[3];
        out.push_back(detail::yes_check("|ratio - 1| decreasing over N = 5,10,15,20, " + profile,
                                        monotone));
        out.push_back(detail::bound_check("final |ratio - 1| at N = 20, " + profile, errs[3],
                                          0.25));
    }

    return out;
}

// Recomputes every cache entry from scratch.  tau keys are re-derived by the
// graph sum whenever the enumeration is affordable and by the ELSV fit
// otherwise, so entries written by one pipeline are cross-checked by the
// other when possible.  Any discrepancy or unverifiable key fails its check.
inline std::vector<CheckResult> verify_cache(const ResultCache& cache, int jobs = 1) {
    std::vector<CheckResult> out;
    std::map<std::pair<int, int>, TauTable> tau_tables;
    std::map<std::pair<int, int>, HodgeTable> hodge_tables;
    auto tau_table_for = [&](int g, int n) -> const TauTable& {
        auto key = std::make_pair(g, n);
        if (auto it = tau_tables.find(key); it != tau_tables.end()) return it->second;
        TauTable t;
        if (6 * g - 6 + 3 * n <= 10) {
            t = expand_and_extract(kontsevich_sum(g, n, jobs), g, n);
        } else {
            ElsvFitOptions opt;
            opt.jobs = jobs;
            t = tau_from_elsv(elsv_fit(g, n, opt));
        }
        return tau_tables.emplace(key, std::move(t)).first->second;
    };
    auto hodge_table_for = [&](int g, int n) -> const HodgeTable& {
        auto key = std::make_pair(g, n);
        if (auto it = hodge_tables.find(key); it != hodge_tables.end()) return it->second;
        ElsvFitOptions opt;
        opt.jobs = jobs;
        return hodge_tables.emplace(key, hodge_from_elsv(elsv_fit(g, n, opt))).first->second;
    };

    for (const auto& [key, entry] : cache.entries()) {
        CheckResult check;
        check.name = "cache " + key;
        check.expected = rational_string(entry.value);
        auto parsed = ResultCache::parse_key(key);
        if (!parsed) {
            check.got = "unrecognized key";
            out.push_back(std::move(check));
            continue;
        }
        try {
            Rat recomputed;
            if (parsed->kind == "tau") {
                TauTable::check_admissible(parsed->g, parsed->ks);
                auto v = tau_table_for(parsed->g, static_cast<int>(parsed->ks.size()))
                             .get(parsed->g, parsed->ks);
                if (!v) throw std::invalid_argument("entry not derivable");
                recomputed = *v;
            } else if (parsed->kind == "hurwitz") {
                recomputed = hurwitz_number({parsed->g, Partition(parsed->ks)},
                                            HurwitzMethod::automatic, jobs);
            } else {
                HodgeTable::check_admissible(parsed->g, parsed->j, parsed->ks);
                recomputed = hodge_table_for(parsed->g, static_cast<int>(parsed->ks.size()))
                                 .get(parsed->g, parsed->j, parsed->ks)
                                 .value_or(Rat(0));
            }
            check.got = rational_string(recomputed);
            check.pass = recomputed == entry.value;
        } catch (const std::exception& e) {
            check.got = std::string("error: ") + e.what();
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace taumap
