#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include "taumap/asymptotics.hpp"
#include "taumap/hurwitz.hpp"

using namespace taumap;

TEST_CASE("Riemann-Hurwitz branch point count", "[hurwitz]") {
    CHECK(riemann_hurwitz_r(0, Partition({3})) == 2);
    CHECK(riemann_hurwitz_r(1, Partition({4})) == 5);
    CHECK(riemann_hurwitz_r(0, Partition({1, 1, 1})) == 4);
    CHECK(riemann_hurwitz_r(0, Partition({1})) == 0);
    CHECK(riemann_hurwitz_r(2, Partition({2})) == 5);
    CHECK_THROWS_AS(riemann_hurwitz_r(-1, Partition({3})), std::domain_error);
    CHECK_THROWS_AS(riemann_hurwitz_r(0, Partition()), std::domain_error);
}

TEST_CASE("Hurwitz anchor values, both methods", "[hurwitz]") {
    struct Anchor {
        int g;
        Partition mu;
        Rat value;
    };
    const std::vector<Anchor> anchors = {
        {0, Partition({2}), Rat(1, 2)},   {0, Partition({3}), Rat(1)},
        {0, Partition({1, 1, 1}), Rat(4)}, {1, Partition({2}), Rat(1, 2)},
        {1, Partition({1}), Rat(0)},       {0, Partition({1}), Rat(1)},
    };
    for (const auto& a : anchors) {
        HurwitzQuery q{a.g, a.mu};
        CAPTURE(a.g, a.mu.to_string());
        CHECK(hurwitz_brute(q) == a.value);
        CHECK(hurwitz_characters(q) == a.value);
    }
}

TEST_CASE("genus zero closed form agrees with enumeration", "[hurwitz]") {
    // Hur_0((d)) = d^{d-3} specializes the closed form.
    CHECK(hurwitz_genus0(Partition({2})) == Rat(1, 2));
    CHECK(hurwitz_genus0(Partition({3})) == 1);
    CHECK(hurwitz_genus0(Partition({4})) == 4);
    CHECK(hurwitz_genus0(Partition({5})) == 25);
    for (int d = 1; d <= 5; ++d) {
        for (const auto& mu : partitions_of(d)) {
            HurwitzQuery q{0, mu};
            CAPTURE(mu.to_string());
            CHECK(hurwitz_brute(q) == hurwitz_genus0(mu));
        }
    }
}

TEST_CASE("brute force equals character method on a small grid", "[hurwitz]") {
    for (int d = 1; d <= 5; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (int g = 0; g <= 2; ++g) {
                long r = riemann_hurwitz_r(g, mu);
                if (r > 7) continue;
                HurwitzQuery q{g, mu};
                Rat brute = hurwitz_brute(q);
                Rat chars = hurwitz_characters(q);
                CAPTURE(g, mu.to_string(), r);
                CHECK(brute == chars);
                // Hur_g(mu) is a non-negative rational with denominator
                // dividing d!.
                CHECK(brute >= 0);
                CHECK(factorial(d) % denominator(brute) == 0);
            }
        }
    }
}

TEST_CASE("Frobenius walk counts match raw enumeration", "[hurwitz]") {
    // Disconnected counts for a fixed target, no transitivity requirement:
    // the character sum against the depth-first search, including the zeros
    // forced by parity.
    BruteOptions opt;
    opt.require_transitive = false;
    for (int d = 1; d <= 4; ++d) {
        for (const auto& nu : partitions_of(d)) {
            for (long r = 0; r <= 6; ++r) {
                CAPTURE(nu.to_string(), r);
                CHECK(transposition_product_count(nu, r) ==
                      count_transposition_tuples(nu, r, opt));
            }
        }
    }
    // Parity vanishing in particular.
    CHECK(transposition_product_count(Partition({1, 1}), 3) == 0);
    CHECK(transposition_product_count(Partition({2}), 4) == 0);
}

TEST_CASE("factorization streaming yields exactly the valid tuples", "[hurwitz]") {
    std::vector<Factorization> found;
    for_each_transitive_factorization(Partition({3}), 2,
                                      [&](const Factorization& f) { found.push_back(f); });
    REQUIRE(found.size() == 3);
    // Deterministic order: the tuple of pairs grows lexicographically.
    CHECK(found[0].transpositions ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    for (const auto& f : found) {
        CHECK(f.valid());
        CHECK(f.target == canonical_of_type(Partition({3})));
        CHECK(f.product().cycle_type() == Partition({3}));
    }

    // ((12); (12)) is the only factorization in S_2 with r = 1.
    found.clear();
    for_each_transitive_factorization(Partition({2}), 1,
                                      [&](const Factorization& f) { found.push_back(f); });
    REQUIRE(found.size() == 1);
    CHECK(found[0].transpositions == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(found[0].valid());

    // ((12),(12),(12); (12)) is the only one with r = 3.
    found.clear();
    for_each_transitive_factorization(Partition({2}), 3,
                                      [&](const Factorization& f) { found.push_back(f); });
    REQUIRE(found.size() == 1);
    CHECK(found[0].transpositions ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 2}, {1, 2}});

    // Parity mismatch: no tuples at all.
    found.clear();
    for_each_transitive_factorization(Partition({2}), 2,
                                      [&](const Factorization& f) { found.push_back(f); });
    CHECK(found.empty());

    // The degenerate degree-1 cover: one empty factorization.
    found.clear();
    for_each_transitive_factorization(Partition({1}), 0,
                                      [&](const Factorization& f) { found.push_back(f); });
    REQUIRE(found.size() == 1);
    CHECK(found[0].transpositions.empty());
    CHECK(found[0].valid());
}

TEST_CASE("streamed factorization count matches the tuple count", "[hurwitz]") {
    for (int d = 2; d <= 4; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (int g = 0; g <= 1; ++g) {
                long r = riemann_hurwitz_r(g, mu);
                long streamed = 0;
                bool all_valid = true;
                for_each_transitive_factorization(mu, r, [&](const Factorization& f) {
                    ++streamed;
                    all_valid = all_valid && f.valid();
                });
                CAPTURE(g, mu.to_string());
                CHECK(all_valid);
                CHECK(Int(streamed) == count_transposition_tuples(mu, r));
            }
        }
    }
}

TEST_CASE("thread count does not change results", "[hurwitz]") {
    const std::vector<std::pair<int, Partition>> queries = {
        {0, Partition({3, 1})}, {1, Partition({2, 2})}, {0, Partition({1, 1, 1, 1})}};
    for (const auto& [g, mu] : queries) {
        HurwitzQuery q{g, mu};
        BruteOptions one, many;
        one.jobs = 1;
        many.jobs = 4;
        CHECK(hurwitz_brute(q, one) == hurwitz_brute(q, many));
    }
}

TEST_CASE("enumeration budget guard", "[hurwitz]") {
    BruteOptions tiny;
    tiny.max_nodes = 10;
    CHECK_THROWS_AS(hurwitz_brute(HurwitzQuery{1, Partition({2, 2})}, tiny), std::runtime_error);

    BruteOptions low_degree;
    low_degree.max_degree = 3;
    CHECK_THROWS_AS(hurwitz_brute(HurwitzQuery{0, Partition({4})}, low_degree),
                    std::runtime_error);
    // The character method has no such limit at this size.
    CHECK(hurwitz_characters(HurwitzQuery{0, Partition({4})}) == 4);
}

TEST_CASE("method dispatcher", "[hurwitz]") {
    HurwitzQuery small{0, Partition({2, 1})};
    CHECK(hurwitz_number(small) == hurwitz_brute(small));
    CHECK(hurwitz_number(small, HurwitzMethod::characters) == hurwitz_brute(small));
    // Above the cutoff the dispatcher switches to characters; force a tiny
    // cutoff so the switch is exercised cheaply.
    HurwitzQuery q{0, Partition({3, 1})};
    CHECK(hurwitz_number(q, HurwitzMethod::automatic, 1, 2) == hurwitz_brute(q));
}

TEST_CASE("character method handles degrees beyond enumeration", "[hurwitz]") {
    // A degree-12 check against the genus-0 closed form.
    Partition mu({7, 5});
    CHECK(hurwitz_characters(HurwitzQuery{0, mu}) == hurwitz_genus0(mu));
    Partition nu({6, 4, 2});
    CHECK(hurwitz_characters(HurwitzQuery{0, nu}) == hurwitz_genus0(nu));
}

TEST_CASE("asymptotic density closed forms and table sums", "[hurwitz]") {
    using taumap::asymptotic_H;
    using taumap::Real;
    using taumap::TauTable;
    const Real two_pi = boost::math::constants::two_pi<Real>();

    TauTable empty;
    CHECK(asymptotic_H(0, {Rat(1)}, empty) == 1 / sqrt(two_pi));
    CHECK(asymptotic_H(0, {Rat(4)}, empty) == pow(Real(4), Real(-2.5)) / sqrt(two_pi));
    CHECK(asymptotic_H(0, {Rat(1), Rat(2)}, empty) == 1 / (two_pi * sqrt(Real(2)) * 3));

    // Stable case: H_1(x) = <tau_1> sqrt(x) / sqrt(2 pi).
    TauTable t11;
    t11.set(1, {1}, Rat(1, 24));
    CHECK(asymptotic_H(1, {Rat(9)}, t11) == Real(3) / (24 * sqrt(two_pi)));
    CHECK_THROWS_AS(asymptotic_H(1, {Rat(1)}, empty), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_H(0, {Rat(0)}, empty), std::domain_error);
}

TEST_CASE("asymptotic ratio preconditions", "[hurwitz]") {
    using taumap::asymptotic_ratio;
    using taumap::TauTable;
    TauTable empty;
    CHECK_THROWS_AS(asymptotic_ratio(0, {Rat(1), Rat(1)}, 10, empty), std::domain_error);
    // x = (1, 103/100) rounds to equal parts at N = 10.
    CHECK_THROWS_AS(asymptotic_ratio(0, {Rat(1), Rat(103, 100)}, 10, empty), std::domain_error);
    CHECK_THROWS_AS(asymptotic_ratio(0, {Rat(1, 100)}, 10, empty), std::domain_error);
    CHECK_THROWS_AS(asymptotic_ratio(0, {Rat(1)}, 0, empty), std::domain_error);
    CHECK_THROWS_AS(asymptotic_ratio(0, {}, 5, empty), std::domain_error);
}

TEST_CASE("normalized Hurwitz numbers drift toward the limit density", "[hurwitz]") {
    using taumap::asymptotic_ratio;
    using taumap::Real;
    using taumap::TauTable;
    TauTable empty;

    auto err = [](const Real& ratio) {
        Real e = ratio - 1;
        return e < 0 ? Real(-e) : e;
    };

    std::vector<long> grid = {5, 10, 15, 20};
    Real prev;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Real e = err(asymptotic_ratio(0, {Rat(1)}, grid[i], empty));
        if (i) CHECK(e < prev);
        prev = e;
    }
    CHECK(prev < Real(1, 4));

    for (std::size_t i = 0; i < grid.size(); ++i) {
        Real e = err(asymptotic_ratio(0, {Rat(1), Rat(2)}, grid[i], empty));
        if (i) CHECK(e < prev);
        prev = e;
    }
    CHECK(prev < Real(1, 4));

    // A stable case drifts as well, if more slowly.
    TauTable t11;
    t11.set(1, {1}, Rat(1, 24));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Real e = err(asymptotic_ratio(1, {Rat(1)}, grid[i], t11));
        if (i) CHECK(e < prev);
        prev = e;
    }
}
