#include <catch2/catch_amalgamated.hpp>

#include "taumap/partition.hpp"
#include "taumap/permutation.hpp"
#include "taumap/rng.hpp"

using namespace taumap;

namespace {
Permutation random_permutation(int d, Rng& rng) {
    std::vector<int> images(d);
    for (int i = 0; i < d; ++i) images[i] = i + 1;
    rng.shuffle(images);
    return Permutation::from_images(images);
}
}  // namespace

TEST_CASE("partition basics and serialization", "[core]") {
    Partition mu({4, 2, 1});
    CHECK(mu.size() == 7);
    CHECK(mu.length() == 3);
    CHECK(mu.to_string() == "4,2,1");
    CHECK(Partition::parse("4,2,1") == mu);
    CHECK(Partition::parse("1,2,4") == mu);  // normalized to weakly decreasing
    CHECK(Partition().size() == 0);
    CHECK(Partition().to_string().empty());
    CHECK_THROWS_AS(Partition({0, 1}), std::invalid_argument);
}

TEST_CASE("partition aut order", "[core]") {
    CHECK(Partition({3, 2, 2, 1, 1, 1}).aut_order() == 2 * 6);
    CHECK(Partition({5}).aut_order() == 1);
    CHECK(Partition().aut_order() == 1);
}

TEST_CASE("conjugacy class sizes", "[core]") {
    CHECK(conjugacy_class_size(Partition({2})) == 1);
    CHECK(conjugacy_class_size(Partition({2, 1, 1})) == 6);
    // Oracle: enumerate all 6 permutations of S(3) and count 3-cycles.
    CHECK(conjugacy_class_size(Partition({3})) == 2);
    // Class sizes over all partitions of d sum to d!.
    for (int d = 1; d <= 8; ++d) {
        Int total = 0;
        for (const auto& mu : partitions_of(d)) total += conjugacy_class_size(mu);
        CHECK(total == factorial(d));
    }
}

TEST_CASE("partitions_of counts and order", "[core]") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0] == Partition());
    CHECK(partitions_of(4).size() == 5);
    // Independent oracle: direct recursion p(d) = sum over first parts.
    std::function<long(int, int)> p = [&](int rem, int maxp) -> long {
        if (rem == 0) return 1;
        long c = 0;
        for (int k = std::min(rem, maxp); k >= 1; --k) c += p(rem - k, k);
        return c;
    };
    CHECK(partitions_of(10).size() == static_cast<std::size_t>(p(10, 10)));
    CHECK(partitions_of(10).size() == 42);
    // Reverse-lexicographic: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    auto p4 = partitions_of(4);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));
}

TEST_CASE("aut order times distinct rearrangements equals length factorial", "[core]") {
    for (const auto& mu : partitions_of(7)) {
        std::vector<int> v = mu.parts();
        std::sort(v.begin(), v.end());
        long arrangements = 0;
        do { ++arrangements; } while (std::next_permutation(v.begin(), v.end()));
        CHECK(mu.aut_order() * arrangements == factorial(mu.length()));
    }
}

TEST_CASE("permutation composition convention", "[core]") {
    int d = 4;
    auto t = [&](int a, int b) { return Permutation::transposition(d, a, b); };

    // identity laws
    Permutation id(d);
    Permutation p = Permutation::from_cycles(d, "(1 3 2)");
    CHECK(compose(id, p) == p);
    CHECK(compose(p, id) == p);
    CHECK(compose(p, p.inverse()) == id);

    // The worked 4-cycle: the word (12)(13)(24)(14)(13) is (1 2 4 3).
    Permutation w = product({t(1, 2), t(1, 3), t(2, 4), t(1, 4), t(1, 3)}, d);
    CHECK(w == Permutation::from_cycles(d, "(1 2 4 3)"));
    CHECK(w.to_cycle_string() == "(1 2 4 3)");
    CHECK(w.cycle_type() == Partition({4}));

    // The word (12)(13) is the 3-cycle (1 3 2).
    Permutation u = product({t(1, 2), t(1, 3)}, d);
    CHECK(u.to_cycle_string() == "(1 3 2)");

    CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), std::invalid_argument);
}

TEST_CASE("cycle types", "[core]") {
    CHECK(Permutation(3).cycle_type() == Partition({1, 1, 1}));
    CHECK(Permutation::from_cycles(4, "(1 2 4 3)").cycle_type() == Partition({4}));
    CHECK(Permutation::transposition(4, 1, 2).cycle_type() == Partition({2, 1, 1}));
    CHECK(Permutation(5).to_cycle_string() == "()");
}

TEST_CASE("cycle notation round trip", "[core]") {
    auto p = Permutation::from_cycles(6, "(1 2)(3 4 5)");
    CHECK(p.apply(1) == 2);
    CHECK(p.apply(3) == 4);
    CHECK(p.apply(5) == 3);
    CHECK(p.apply(6) == 6);
    CHECK(Permutation::from_cycles(6, p.to_cycle_string()) == p);
    CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 2 2)"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 5)"), std::invalid_argument);
}

TEST_CASE("conjugation preserves cycle type", "[core]") {
    Rng rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 2 + static_cast<int>(rng.below(7));
        auto p = random_permutation(d, rng);
        auto q = random_permutation(d, rng);
        auto conj = compose(q.inverse(), compose(p, q));
        CHECK(conj.cycle_type() == p.cycle_type());
    }
}

TEST_CASE("transitivity", "[core]") {
    auto t12_3 = Permutation::transposition(3, 1, 2);
    auto t23_3 = Permutation::transposition(3, 2, 3);
    CHECK_FALSE(is_transitive({t12_3}, 3));
    CHECK(is_transitive({t12_3, t23_3}, 3));
    CHECK_FALSE(is_transitive({Permutation::transposition(4, 1, 2),
                               Permutation::transposition(4, 3, 4)}, 4));
    CHECK(is_transitive({}, 1));

    // Monotone: adding generators never flips true -> false.
    Rng rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        int d = 2 + static_cast<int>(rng.below(5));
        std::vector<Permutation> gens;
        bool was = false;
        for (int k = 0; k < 4; ++k) {
            gens.push_back(random_permutation(d, rng));
            bool now = is_transitive(gens, d);
            CHECK((!was || now));
            was = now;
        }
    }
}
