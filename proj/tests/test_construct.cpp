#include <doctest.h>

#include "hexpath/construct.hpp"
#include "hexpath/search.hpp"
#include "hexpath/unitgrid.hpp"

using namespace hexpath;

TEST_CASE("stored witnesses are optimal-length minimal winning paths") {
    for (int n = 1; n <= 20; ++n) {
        auto w = witness(n);
        CHECK(w.size() == optimal_length(n));
        CHECK(is_minimal_winning_path(w));
        CHECK(eq1_check(w).holds);
    }
    CHECK_THROWS_AS(witness(0), domain_error);
    CHECK_THROWS_AS(witness(21), domain_error);
}

TEST_CASE("witness spot checks against the published coordinates") {
    StoneSet w5(5, {{1, 1}, {1, 2}, {4, 2}, {5, 2}, {1, 3}, {3, 3}, {5, 3}, {1, 4}, {2, 4},
                    {5, 4}, {5, 5}});
    CHECK(witness(5) == w5);
    CHECK(witness(1) == StoneSet(1, {{1, 1}}));
    auto [a, b] = endpoints(witness(10));
    CHECK(a == Coord{1, 1});
    CHECK(b == Coord{1, 10});
    CHECK(witness(10).size() == 47);  // answers the length-47 puzzle
}

TEST_CASE("classification of the stored witnesses") {
    CHECK(classify(witness(6)) == TemplateId::II);
    CHECK(classify(witness(5)) == TemplateId::I);
    CHECK(classify(witness(14)) == TemplateId::II);
    CHECK(classify(witness(10)) == TemplateId::III);
    CHECK(classify(witness(18)) == TemplateId::III);
    for (int n : {7, 8, 9, 11, 12, 13, 15, 16, 17, 19, 20})
        CHECK(classify(witness(n)) == TemplateId::I);
    // every recursion base must classify
    for (int n = 13; n <= 20; ++n) CHECK(classify(witness(n)).has_value());
}

TEST_CASE("non-optimal seeds may classify; the figure-2a path is type II") {
    // corner-to-corner from (10,1) to (1,10) with nothing else outside the
    // window, so the obtuse-corner template matches (recorded, not required)
    StoneSet fig2a(
        10, {{10, 1}, {10, 2}, {10, 3}, {10, 4}, {10, 5}, {10, 6}, {10, 7}, {10, 8}, {9, 9},
             {8, 9},  {7, 9},  {6, 9},  {5, 9},  {4, 9},  {3, 9},  {3, 8},  {3, 7},  {3, 6},
             {3, 5},  {4, 4},  {5, 4},  {6, 4},  {6, 5},  {5, 6},  {5, 7},  {6, 7},  {7, 7},
             {8, 6},  {8, 5},  {8, 4},  {8, 3},  {8, 2},  {7, 2},  {6, 2},  {5, 2},  {4, 2},
             {3, 2},  {2, 2},  {1, 3},  {1, 4},  {1, 5},  {1, 6},  {1, 7},  {1, 8},  {1, 9},
             {1, 10}});
    CHECK(classify(fig2a) == TemplateId::II);
    // extending the non-optimal seed still yields a verified winning path,
    // one stone short of the optimum just like its seed
    auto big = extend(fig2a);
    CHECK(big.size() == 156);
    CHECK(optimal_length(18) == 157);
    CHECK(is_minimal_winning_path(big));

    std::vector<Coord> column;
    for (int y = 1; y <= 6; ++y) column.push_back({1, y});
    CHECK_FALSE(classify(StoneSet(6, column)).has_value());
}

TEST_CASE("extend reproduces the witness pairs exactly") {
    const std::pair<int, int> pairs[] = {{5, 13}, {6, 14}, {7, 15}, {8, 16},
                                         {10, 18}, {11, 19}, {12, 20}};
    for (const auto& pair : pairs) {
        CAPTURE(pair.first);
        CHECK(extend(witness(pair.first)) == witness(pair.second));
    }
}

TEST_CASE("extend results are verified winning paths of the right length") {
    for (int n = 5; n <= 12; ++n) {
        auto big = extend(witness(n));
        CHECK(big.n() == n + 8);
        CHECK(big.size() == witness(n).size() + 8 * n + 30);
        CHECK(is_minimal_winning_path(big));
        if (n != 9) CHECK(big.size() == optimal_length(n + 8));
    }
    // base 9 is the single non-sharp seed: valid but one below the optimum
    auto seventeen = extend(witness(9));
    CHECK(seventeen.size() == 139);
    CHECK(optimal_length(17) == 140);
    CHECK(is_minimal_winning_path(seventeen));
}

TEST_CASE("extension closes under classification") {
    for (int n = 5; n <= 12; ++n) {
        auto big = extend(witness(n));
        auto cls = classify(big);
        CHECK(cls.has_value());
        CHECK(cls == classify(witness(n)));  // same template again
    }
}

TEST_CASE("extend rejects unclassifiable seeds") {
    std::vector<Coord> column;
    for (int y = 1; y <= 6; ++y) column.push_back({1, y});
    CHECK_THROWS_AS(extend(StoneSet(6, column)), domain_error);
}

TEST_CASE("bound-matching seeds stay bound-matching") {
    // if k = n^2/2 - n/4 + c then the extension keeps the same offset c
    for (int n = 5; n <= 12; ++n) {
        auto s = witness(n);
        auto big = extend(s);
        // 4c = 4k - 2n^2 + n must be preserved with n -> n+8
        long c4_seed = 4L * s.size() - 2L * n * n + n;
        long m = n + 8;
        long c4_big = 4L * big.size() - 2L * m * m + m;
        CHECK(c4_seed == c4_big);
    }
}

TEST_CASE("generate produces verified optimal paths") {
    for (int n : {13, 20}) {
        auto [s, trace] = generate(n);
        CHECK(s == witness(n));
        CHECK(trace.steps.empty());
    }
    for (int n : {21, 22, 25, 26, 28}) {
        auto [s, trace] = generate(n);
        CHECK(s.n() == n);
        CHECK(s.size() == theorem_bound(n).bound);
        CHECK(is_minimal_winning_path(s));
        CHECK(eq1_check(s).holds);
        CHECK(trace.base_n == 13 + (n - 13) % 8);
        CHECK(trace.steps.size() == static_cast<size_t>((n - trace.base_n) / 8));
    }
    CHECK_THROWS_AS(generate(12), domain_error);
}

TEST_CASE("generate recurses deep") {
    for (int n : {44, 77}) {
        auto [s, trace] = generate(n);
        CHECK(s.size() == theorem_bound(n).bound);
        CHECK(is_minimal_winning_path(s));
        CHECK(eq1_check(s).holds);
    }
    CHECK(generate(44).first.size() == 957);
}

TEST_CASE("the enumerated optimum confirms stored witness lengths (n <= 6)") {
    for (int n = 1; n <= 6; ++n) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.mode = SearchMode::FindOne;
        CHECK(find_longest(cfg).length == witness(n).size());
    }
}
