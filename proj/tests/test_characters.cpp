#include <catch2/catch_amalgamated.hpp>

#include "taumap/characters.hpp"

using namespace taumap;

TEST_CASE("hook length dimensions", "[characters]") {
    CHECK(representation_dimension(Partition({3})) == 1);
    CHECK(representation_dimension(Partition({2, 1})) == 2);
    CHECK(representation_dimension(Partition({1, 1, 1})) == 1);
    CHECK(representation_dimension(Partition({3, 2})) == 5);
    CHECK(representation_dimension(Partition({4, 4, 4})) == 462);
    // Sum of squares of dimensions = d!.
    for (int d = 1; d <= 8; ++d) {
        Int total = 0;
        for (const auto& lambda : partitions_of(d)) {
            Int dim = representation_dimension(lambda);
            total += dim * dim;
        }
        CHECK(total == factorial(d));
    }
}

TEST_CASE("content sums", "[characters]") {
    CHECK(content_sum(Partition({2})) == 1);
    CHECK(content_sum(Partition({1, 1})) == -1);
    CHECK(content_sum(Partition({2, 1})) == 0);
    CHECK(content_sum(Partition({3, 1})) == 2);
    // Conjugate partition negates all contents.
    CHECK(content_sum(Partition({4, 2, 1})) == -content_sum(Partition({3, 2, 1, 1})));
}

TEST_CASE("character columns match the S_3 and S_4 tables", "[characters]") {
    auto col = character_column(Partition({2, 1}));
    CHECK(col.at(Partition({3})) == 1);
    CHECK(col.count(Partition({2, 1})) == 0);
    CHECK(col.at(Partition({1, 1, 1})) == -1);

    col = character_column(Partition({3}));
    CHECK(col.at(Partition({3})) == 1);
    CHECK(col.at(Partition({2, 1})) == -1);
    CHECK(col.at(Partition({1, 1, 1})) == 1);

    // S_4, class (2,2): chi^(4)=1, chi^(3,1)=-1, chi^(2,2)=2, chi^(2,1,1)=-1,
    // chi^(1^4)=1.
    col = character_column(Partition({2, 2}));
    CHECK(col.at(Partition({4})) == 1);
    CHECK(col.at(Partition({3, 1})) == -1);
    CHECK(col.at(Partition({2, 2})) == 2);
    CHECK(col.at(Partition({2, 1, 1})) == -1);
    CHECK(col.at(Partition({1, 1, 1, 1})) == 1);
}

TEST_CASE("identity column reproduces hook length dimensions", "[characters]") {
    for (int d = 1; d <= 9; ++d) {
        std::vector<int> ones(d, 1);
        auto col = character_column(Partition(ones));
        CHECK(col.size() == partitions_of(d).size());
        for (const auto& lambda : partitions_of(d))
            CHECK(col.at(lambda) == representation_dimension(lambda));
    }
}

TEST_CASE("column orthogonality", "[characters]") {
    // sum_lambda chi^lambda(mu) chi^lambda(nu) = delta_{mu,nu} z_mu.
    for (int d = 1; d <= 7; ++d) {
        auto classes = partitions_of(d);
        std::vector<std::map<Partition, Int>> cols;
        for (const auto& nu : classes) cols.push_back(character_column(nu));
        for (std::size_t a = 0; a < classes.size(); ++a) {
            for (std::size_t b = a; b < classes.size(); ++b) {
                Int dot = 0;
                for (const auto& [lambda, va] : cols[a]) {
                    auto it = cols[b].find(lambda);
                    if (it != cols[b].end()) dot += va * it->second;
                }
                if (a == b)
                    CHECK(dot == classes[a].centralizer_order());
                else
                    CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("single-value recursion agrees with column sweep", "[characters]") {
    for (int d = 1; d <= 6; ++d) {
        for (const auto& nu : partitions_of(d)) {
            auto col = character_column(nu);
            for (const auto& lambda : partitions_of(d)) {
                auto it = col.find(lambda);
                Int expected = (it == col.end()) ? Int(0) : it->second;
                CHECK(character(lambda, nu) == expected);
            }
        }
    }
}

TEST_CASE("content sum is the transposition central character", "[characters]") {
    // f_lambda = |C_(2,1^{d-2})| chi^lambda(2,1^{d-2}) / dim lambda.
    for (int d = 2; d <= 7; ++d) {
        std::vector<int> tclass{2};
        for (int i = 0; i < d - 2; ++i) tclass.push_back(1);
        Partition transpositions(tclass);
        Int csize = conjugacy_class_size(transpositions);
        auto col = character_column(transpositions);
        for (const auto& lambda : partitions_of(d)) {
            auto it = col.find(lambda);
            Int chi = (it == col.end()) ? Int(0) : it->second;
            CHECK(content_sum(lambda) * representation_dimension(lambda) == csize * chi);
        }
    }
}

TEST_CASE("large sparse column stays small", "[characters]") {
    // Short class with large parts: the support is tiny compared to p(d).
    auto col = character_column(Partition({40, 20}));
    CHECK(col.size() > 0);
    CHECK(col.size() < 20000);
    for (const auto& [lambda, chi] : col) {
        CHECK(lambda.size() == 60);
        CHECK(chi != 0);
    }
}
