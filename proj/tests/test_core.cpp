#include <catch2/catch_amalgamated.hpp>

#include "gschur/core.hpp"

using namespace gschur;

TEST_CASE("composition construction and accessors") {
    Composition empty;
    CHECK(empty.size() == 0);
    CHECK(empty.length() == 0);
    CHECK(empty.empty());

    Composition a({2, 1});
    CHECK(a.size() == 3);
    CHECK(a.length() == 2);
    CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({-1}), std::invalid_argument);
}

TEST_CASE("partition validates weak decrease") {
    CHECK_NOTHROW(Partition({3, 3, 1}));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(TwoRowPartition(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(TwoRowPartition(2, 0), std::invalid_argument);
    CHECK(TwoRowPartition(3, 2).n() == 5);
}

TEST_CASE("set_of partial sums") {
    CHECK(set_of(Composition({2, 1})) == std::set<int>{2});
    CHECK(set_of(Composition({1, 1, 1})) == std::set<int>{1, 2});
    CHECK(set_of(Composition({2, 2, 1})) == std::set<int>{2, 4});
    CHECK(set_of(Composition()).empty());
    CHECK(set_of(Composition({5})).empty());
}

TEST_CASE("comp_of inverts partial sums") {
    CHECK(comp_of({2}, 3) == Composition({2, 1}));
    CHECK(comp_of({}, 4) == Composition({4}));
    CHECK(comp_of({1, 2, 4, 5}, 6) == Composition({1, 1, 2, 1, 1}));
    CHECK(comp_of({}, 0) == Composition());
    CHECK_THROWS_AS(comp_of({3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(comp_of({0}, 3), std::invalid_argument);
}

TEST_CASE("set_of and comp_of are mutually inverse up to n = 12") {
    for (int n = 0; n <= 12; ++n) {
        const auto all = compositions(n);
        CHECK(static_cast<int>(all.size()) == (n == 0 ? 1 : 1 << (n - 1)));
        std::set<std::set<int>> seen_sets;
        for (const Composition& alpha : all) {
            const auto s = set_of(alpha);
            CHECK(comp_of(s, n) == alpha);
            seen_sets.insert(s);
        }
        // distinct compositions give distinct subsets, so both maps are bijective
        CHECK(seen_sets.size() == all.size());
    }
}

TEST_CASE("compositions are emitted in lexicographic order") {
    const auto all = compositions(4);
    REQUIRE(all.size() == 8);
    CHECK(all.front() == Composition({1, 1, 1, 1}));
    CHECK(all.back() == Composition({4}));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(compositions(0) == std::vector<Composition>{Composition()});
}

TEST_CASE("l_lambda") {
    CHECK(l_lambda({2, 1}) == 2);
    CHECK(l_lambda({2, 2}) == 3);
    CHECK(l_lambda({4, 4}) == 5);
}

TEST_CASE("lambda_variant builds candidate shapes") {
    CHECK(lambda_variant({3, 2}, 4, 1) == Partition({2, 1, 1}));
    CHECK(lambda_variant({3, 2}, 4, 2) == Partition({2, 2}));
    CHECK_FALSE(lambda_variant({2, 1}, 2, 1).has_value());
    CHECK(lambda_variant({2, 1}, 2, 2) == Partition({1, 1}));
    CHECK(lambda_variant({3, 2}, 5, 1) == Partition({3, 2}));
    CHECK_FALSE(lambda_variant({3, 2}, 5, 2).has_value());  // k = 0
    CHECK_THROWS_AS(lambda_variant({3, 2}, 6, 1), std::invalid_argument);
    CHECK_THROWS_AS(lambda_variant({3, 2}, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(lambda_variant({3, 2}, 4, 3), std::invalid_argument);
}

TEST_CASE("strict guard differs from the constructive rule on small cases") {
    // (2,1) at m = n needs the full shape even though the strict guard fails
    CHECK(lambda_variant({2, 1}, 3, 1) == Partition({2, 1}));
    CHECK(lambda_variant_strict_guard({2, 1}, 3, 1));
    // (3,2), m = 4: strict guard would drop the first variant
    CHECK_FALSE(lambda_variant_strict_guard({3, 2}, 4, 1));
    CHECK(lambda_variant({3, 2}, 4, 1).has_value());
}

TEST_CASE("par_candidates") {
    CHECK(par_candidates({3, 2}, 4) ==
          std::vector<Partition>{Partition({2, 1, 1}), Partition({2, 2})});
    CHECK(par_candidates({2, 2}, 3) == std::vector<Partition>{Partition({1, 1, 1})});
    CHECK(par_candidates({2, 1}, 3) == std::vector<Partition>{Partition({2, 1})});
    CHECK(par_candidates({2, 1}, 2) == std::vector<Partition>{Partition({1, 1})});
    CHECK_THROWS_AS(par_candidates({2, 1}, 4), std::invalid_argument);
}

TEST_CASE("par_candidates at m = n is the shape itself") {
    for (int n = 2; n <= 10; ++n)
        for (int r1 = n - 1; r1 >= (n + 1) / 2; --r1) {
            const TwoRowPartition lambda{r1, n - r1};
            CHECK(par_candidates(lambda, n) ==
                  std::vector<Partition>{lambda.to_partition()});
        }
}

TEST_CASE("shape text syntax") {
    CHECK(parse_composition("3,2") == Composition({3, 2}));
    CHECK(parse_composition("") == Composition());
    CHECK(parse_partition("10,4,1") == Partition({10, 4, 1}));
    CHECK(to_string(Composition({3, 2})) == "3,2");
    CHECK(to_string(Composition()) == "");
    CHECK_THROWS_AS(parse_composition("3,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("3,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2,3"), std::invalid_argument);
}
