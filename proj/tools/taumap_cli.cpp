// taumap: intersection numbers three independent ways, with the supporting
// Hurwitz counts, surface maps, and random-tree statistics.
//
// Exit codes: 0 success, 1 verification or computation failure, 2 usage
// error.  All subcommands print deterministically for fixed inputs, cache
// state, and seed.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taumap/cache.hpp"
#include "taumap/config.hpp"
#include "taumap/elsv.hpp"
#include "taumap/hurwitz.hpp"
#include "taumap/kontsevich.hpp"
#include "taumap/partition.hpp"
#include "taumap/ribbon.hpp"
#include "taumap/tau_table.hpp"
#include "taumap/trees.hpp"
#include "taumap/verify.hpp"

namespace {

using nlohmann::json;
using namespace taumap;

struct Options {
    int jobs = 1;
    bool json_out = false;
    std::uint64_t seed = config::default_seed;
};

std::optional<ResultCache> open_cache() {
    const char* path = std::getenv(config::cache_env);
    if (!path || !*path) return std::nullopt;
    return ResultCache(path);
}

int brute_cutoff() {
    const char* s = std::getenv(config::brute_cutoff_env);
    if (!s || !*s) return config::hurwitz_brute_cutoff;
    std::size_t pos = 0;
    int value = std::stoi(s, &pos);
    if (pos != std::string(s).size() || value < 0)
        throw std::invalid_argument(std::string(config::brute_cutoff_env) +
                                    " must be a non-negative integer");
    return value;
}

// Returns false (and reports) when a freshly computed value contradicts the
// stored one; the cache file itself is never rewritten.
bool store(std::optional<ResultCache>& cache, const std::string& key, const Rat& value,
           const std::string& method) {
    if (!cache) return true;
    if (cache->check_or_insert(key, value, method) != CacheOutcome::Mismatch) return true;
    std::cerr << "cache mismatch for " << key << ": cached "
              << rational_string(cache->get(key)->value) << ", recomputed "
              << rational_string(value) << "\n";
    return false;
}

bool store_tau(std::optional<ResultCache>& cache, const TauTable& table,
               const std::string& method) {
    bool ok = true;
    for (const auto& [key, value] : table.entries())
        ok = store(cache, ResultCache::tau_key(key.g, key.k), value, method) && ok;
    return ok;
}

json graph_json(const RibbonGraph& rg) {
    json face_obj = json::object();
    for (const auto& cycle : faces(rg))
        face_obj[std::to_string(rg.face_labels.at(cycle[0]))] = cycle;
    return {{"darts", rg.num_darts},
            {"sigma", rg.sigma.to_cycle_string()},
            {"alpha", rg.alpha.to_cycle_string()},
            {"faces", face_obj}};
}

json tau_entries_json(const TauTable& table) {
    json arr = json::array();
    for (const auto& [key, value] : table.entries())
        arr.push_back({{"g", key.g}, {"k", key.k}, {"value", rational_string(value)}});
    return arr;
}

void print_tau_entries(const TauTable& table) {
    for (const auto& [key, value] : table.entries())
        std::cout << tau_display(key.g, key.k) << " = " << rational_string(value) << "\n";
}

int run_tau(const Options& opt, int g, int n, bool show_K) {
    RationalFunction K = kontsevich_sum(g, n, opt.jobs);
    TauTable table = expand_and_extract(K, g, n);
    auto cache = open_cache();
    bool cache_ok = store_tau(cache, table, "kontsevich");
    if (opt.json_out) {
        json out{{"g", g}, {"n", n}, {"entries", tau_entries_json(table)}};
        if (show_K) out["K"] = K.to_string();
        std::cout << out.dump(2) << "\n";
    } else {
        if (show_K) std::cout << "K(" << g << "," << n << ") = " << K.to_string() << "\n";
        print_tau_entries(table);
    }
    return cache_ok ? 0 : 1;
}

int run_hurwitz(const Options& opt, int g, const std::string& mu_str,
                const std::string& method_name) {
    Partition mu = Partition::parse(mu_str);
    long r = riemann_hurwitz_r(g, mu);
    HurwitzMethod method = HurwitzMethod::automatic;
    if (method_name == "brute") method = HurwitzMethod::brute;
    if (method_name == "characters") method = HurwitzMethod::characters;
    int cutoff = brute_cutoff();
    Rat value = hurwitz_number({g, mu}, method, opt.jobs, cutoff);
    std::string resolved = method_name;
    if (method == HurwitzMethod::automatic)
        resolved = mu.size() <= cutoff ? "brute" : "characters";
    auto cache = open_cache();
    bool cache_ok = store(cache, ResultCache::hurwitz_key(g, mu), value, resolved);
    if (opt.json_out) {
        json out{{"g", g},
                 {"mu", mu.parts()},
                 {"r", r},
                 {"method", resolved},
                 {"value", rational_string(value)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rational_string(value) << "\n";
    }
    return cache_ok ? 0 : 1;
}

int run_maps(const Options& opt, int g, int n, bool list) {
    TrivalentEnumeration en = enumerate_trivalent_maps_detailed(g, n, opt.jobs);
    if (opt.json_out) {
        json out{{"g", g},
                 {"n", n},
                 {"classes", en.classes.size()},
                 {"raw_dart_structures", en.raw_dart_structures}};
        if (list) {
            json arr = json::array();
            for (const TrivalentClass& cls : en.classes)
                arr.push_back({{"graph", graph_json(cls.graph)}, {"aut", cls.aut_order}});
            out["list"] = arr;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "trivalent classes for (g,n) = (" << g << "," << n
                  << "): " << en.classes.size() << "\n";
        if (list) {
            int i = 0;
            for (const TrivalentClass& cls : en.classes)
                std::cout << "class " << ++i << ": aut " << cls.aut_order << ", "
                          << graph_json(cls.graph).dump() << "\n";
        }
    }
    return 0;
}

int run_branching(const Options& opt, int g, const std::string& mu_str, bool histogram) {
    Partition mu = Partition::parse(mu_str);
    long r = riemann_hurwitz_r(g, mu);
    BruteOptions bopt;
    bopt.jobs = opt.jobs;
    long long total = 0, points = 0, circles = 0;
    std::map<std::vector<int>, std::pair<RibbonGraph, long long>> types;
    for_each_transitive_factorization(
        mu, r,
        [&](const Factorization& f) {
            ++total;
            if (!histogram) return;
            LabeledBranchingGraph b = branching_graph_from_factorization(f);
            HomotopyOutcome outcome = homotopy_type(b);
            if (const auto* shape = std::get_if<DegenerateShape>(&outcome)) {
                (*shape == DegenerateShape::point ? points : circles) += 1;
                return;
            }
            const RibbonGraph& reduced = std::get<HomotopyType>(outcome).graph;
            auto it = types.try_emplace(detail::encoding_of(reduced), reduced, 0LL).first;
            it->second.second += 1;
        },
        bopt);
    if (opt.json_out) {
        json out{{"g", g}, {"mu", mu.parts()}, {"r", r}, {"factorizations", total}};
        if (histogram) {
            json arr = json::array();
            if (points) arr.push_back({{"shape", "point"}, {"count", points}});
            if (circles) arr.push_back({{"shape", "circle"}, {"count", circles}});
            for (const auto& [enc, rec] : types)
                arr.push_back({{"shape", "graph"},
                               {"genus", genus(rec.first)},
                               {"aut", automorphism_order(rec.first)},
                               {"graph", graph_json(rec.first)},
                               {"count", rec.second}});
            out["histogram"] = arr;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "transitive factorizations of (" << mu.to_string() << ") into " << r
                  << " transpositions: " << total << "\n";
        if (histogram) {
            if (points) std::cout << "point: " << points << "\n";
            if (circles) std::cout << "circle: " << circles << "\n";
            int i = 0;
            for (const auto& [enc, rec] : types)
                std::cout << "homotopy type " << ++i << " (darts " << rec.first.num_darts
                          << ", genus " << genus(rec.first) << ", aut "
                          << automorphism_order(rec.first) << "): " << rec.second << "\n";
        }
    }
    return 0;
}

int run_elsv_fit(const Options& opt, int g, int n, bool hodge) {
    ElsvFitOptions fopt;
    fopt.jobs = opt.jobs;
    ElsvPolynomial fit = elsv_fit(g, n, fopt);
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("mu_" + std::to_string(i));
    TauTable tau = tau_from_elsv(fit);
    HodgeTable hodge_table = hodge_from_elsv(fit);
    auto cache = open_cache();
    bool cache_ok = store_tau(cache, tau, "elsv");
    if (hodge)
        for (const auto& [key, value] : hodge_table.entries())
            cache_ok =
                store(cache, ResultCache::hodge_key(key.g, key.j, key.k), value, "elsv") &&
                cache_ok;
    if (opt.json_out) {
        json out{{"g", g},
                 {"n", n},
                 {"polynomial", fit.poly.to_string(names)},
                 {"tau", tau_entries_json(tau)}};
        if (hodge) {
            json arr = json::array();
            for (const auto& [key, value] : hodge_table.entries())
                arr.push_back({{"g", key.g},
                               {"j", key.j},
                               {"k", key.k},
                               {"value", rational_string(value)}});
            out["hodge"] = arr;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "P(" << g << "," << n << ") = " << fit.poly.to_string(names) << "\n";
        print_tau_entries(tau);
        if (hodge)
            for (const auto& [key, value] : hodge_table.entries())
                std::cout << hodge_display(key.g, key.j, key.k) << " = "
                          << rational_string(value) << "\n";
    }
    return cache_ok ? 0 : 1;
}

struct TreesArgs {
    std::string op;
    long m = 0;        // 0 = per-op default
    long samples = 0;  // 0 = per-op default
    double s1 = 1.0, s2 = 1.0;
    double tolerance = 0.0;  // 0 = per-op default
};

int run_trees(const Options& opt, const TreesArgs& args) {
    long m = args.m, samples = args.samples;
    double tol = args.tolerance;
    json report{{"op", args.op}, {"seed", opt.seed}};
    double statistic = 0.0, expected = 0.0;
    if (args.op == "valence") {
        if (!m) m = config::valence_m;
        if (!samples) samples = config::valence_samples;
        if (!tol) tol = config::valence_tv_max;
        statistic = valence_histogram(static_cast<int>(m), samples, opt.seed, opt.jobs).tv;
        report["m"] = m;
        report["samples"] = samples;
    } else if (args.op == "borel") {
        if (!m) m = config::borel_m;
        if (!samples) samples = config::borel_samples;
        if (!tol) tol = config::borel_tv_max;
        statistic = root_component_law(static_cast<int>(m), samples, opt.seed,
                                       config::borel_k_max, opt.jobs)
                        .tv;
        report["m"] = m;
        report["samples"] = samples;
        report["k_max"] = config::borel_k_max;
    } else if (args.op == "rayleigh") {
        if (!m) m = config::rayleigh_m;
        if (!samples) samples = config::rayleigh_samples;
        if (!tol) tol = config::rayleigh_ks_max;
        statistic = trunk_length_law(static_cast<int>(m), samples, opt.seed, opt.jobs).ks;
        report["m"] = m;
        report["samples"] = samples;
    } else if (args.op == "split") {
        if (!m) m = config::split_m;
        if (!samples) samples = config::split_samples;
        if (!tol) tol = config::split_ks_max;
        statistic = trunk_split_law(static_cast<int>(m), samples, opt.seed, opt.jobs).ks;
        report["m"] = m;
        report["samples"] = samples;
    } else if (args.op == "edge-factor") {
        if (!samples) samples = config::edge_factor_samples;
        expected = std::sqrt(2.0) / (std::sqrt(args.s1) + std::sqrt(args.s2));
        if (!tol) tol = config::edge_factor_rel_max * expected;
        statistic = edge_factor_mc(args.s1, args.s2, samples, opt.seed, opt.jobs);
        report["samples"] = samples;
        report["s1"] = args.s1;
        report["s2"] = args.s2;
    } else {  // assembly
        if (!tol) tol = config::assembly_tolerance;
        expected = std::exp(-2.0) / 2;
        statistic = static_cast<double>(assembly_success_rate(Real(tol)));
        report.erase("seed");
    }
    report["statistic"] = statistic;
    report["expected"] = expected;
    report["tolerance"] = tol;
    bool pass = std::fabs(statistic - expected) <= tol;
    report["pass"] = pass;
    std::cout << report.dump(2) << "\n";
    return pass ? 0 : 1;
}

void print_report(const std::string& suite, const std::vector<CheckResult>& checks,
                  bool json_out) {
    if (json_out) {
        json arr = json::array();
        long long failed = 0;
        for (const CheckResult& c : checks) {
            arr.push_back({{"name", c.name},
                           {"expected", c.expected},
                           {"got", c.got},
                           {"pass", c.pass}});
            failed += c.pass ? 0 : 1;
        }
        json out{{"suite", suite},
                 {"checks", arr},
                 {"passed", static_cast<long long>(checks.size()) - failed},
                 {"failed", failed}};
        std::cout << out.dump(2) << "\n";
        return;
    }
    long long failed = 0;
    for (const CheckResult& c : checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(56) << c.name
                  << " expected " << std::setw(22) << c.expected << " got " << c.got << "\n";
        failed += c.pass ? 0 : 1;
    }
    std::cout << suite << ": " << checks.size() << " checks, " << checks.size() - failed
              << " passed, " << failed << " failed\n";
}

int run_verify(const Options& opt, const std::string& suite) {
    std::vector<CheckResult> checks;
    if (suite == "core" || suite == "all") {
        auto core = verify_core(opt.jobs);
        checks.insert(checks.end(), core.begin(), core.end());
        if (auto cache = open_cache()) {
            auto cache_checks = verify_cache(*cache, opt.jobs);
            checks.insert(checks.end(), cache_checks.begin(), cache_checks.end());
        }
    }
    if (suite == "asymptotic" || suite == "all") {
        auto mc = verify_asymptotic(opt.seed, opt.jobs);
        checks.insert(checks.end(), mc.begin(), mc.end());
    }
    print_report(suite, checks, opt.json_out);
    return all_pass(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact psi-class intersection numbers, Hurwitz counts, maps on surfaces, "
                 "and random-tree statistics",
                 "taumap"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", opt.jobs, "worker threads (default 1)")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--json", opt.json_out, "machine-readable JSON output");
    };

    int g = 0, n = 1;
    std::string mu_str, method = "auto", suite = "all";
    bool show_K = false, list = false, histogram = false, hodge = false;
    TreesArgs targs;

    CLI::App* tau = app.add_subcommand("tau", "intersection numbers from the graph sum");
    tau->add_option("--g", g, "genus")->required();
    tau->add_option("--n", n, "marked points")->required();
    tau->add_flag("--show-K", show_K, "also print the rational function K(g,n)");
    add_common(tau);

    CLI::App* hur = app.add_subcommand("hurwitz", "Hurwitz number Hur_g(mu)");
    hur->add_option("--g", g, "genus")->required();
    hur->add_option("--mu", mu_str, "partition, comma separated, e.g. 4,2,1")->required();
    hur->add_option("--method", method, "brute | characters | auto")
        ->check(CLI::IsMember({"auto", "brute", "characters"}));
    add_common(hur);

    CLI::App* maps = app.add_subcommand("maps", "trivalent map classes with labeled faces");
    maps->add_option("--g", g, "genus")->required();
    maps->add_option("--n", n, "faces")->required();
    maps->add_flag("--list", list, "print each class (darts, sigma, alpha, faces)");
    add_common(maps);

    CLI::App* bra = app.add_subcommand("branching", "branching graphs of factorizations");
    bra->add_option("--g", g, "genus")->required();
    bra->add_option("--mu", mu_str, "monodromy partition over infinity")->required();
    bra->add_flag("--histogram", histogram, "tally homotopy types over all factorizations");
    add_common(bra);

    CLI::App* fit = app.add_subcommand("elsv-fit", "fit the Hurwitz polynomial P_g");
    fit->add_option("--g", g, "genus")->required();
    fit->add_option("--n", n, "number of parts")->required();
    fit->add_flag("--hodge", hodge, "also extract the lambda-class blocks");
    add_common(fit);

    CLI::App* trees = app.add_subcommand("trees", "random-tree statistics vs their limits");
    trees->add_option("--op", targs.op, "valence | borel | rayleigh | split | edge-factor | assembly")
        ->required()
        ->check(CLI::IsMember({"valence", "borel", "rayleigh", "split", "edge-factor",
                               "assembly"}));
    trees->add_option("--m", targs.m, "tree size (0 = pinned default)");
    trees->add_option("--samples", targs.samples, "sample count (0 = pinned default)");
    trees->add_option("--seed", opt.seed, "RNG seed");
    trees->add_option("--s1", targs.s1, "edge-factor s1 (default 1)");
    trees->add_option("--s2", targs.s2, "edge-factor s2 (default 1)");
    trees->add_option("--tolerance", targs.tolerance, "pass tolerance (0 = pinned default)");
    add_common(trees);

    CLI::App* ver = app.add_subcommand("verify", "cross-pipeline verification suites");
    ver->add_option("--suite", suite, "core | asymptotic | all")
        ->check(CLI::IsMember({"core", "asymptotic", "all"}));
    ver->add_option("--seed", opt.seed, "RNG seed for the asymptotic suite");
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(tau)) return run_tau(opt, g, n, show_K);
        if (app.got_subcommand(hur)) return run_hurwitz(opt, g, mu_str, method);
        if (app.got_subcommand(maps)) return run_maps(opt, g, n, list);
        if (app.got_subcommand(bra)) return run_branching(opt, g, mu_str, histogram);
        if (app.got_subcommand(fit)) return run_elsv_fit(opt, g, n, hodge);
        if (app.got_subcommand(trees)) return run_trees(opt, targs);
        if (app.got_subcommand(ver)) return run_verify(opt, suite);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
