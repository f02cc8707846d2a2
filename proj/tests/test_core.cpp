#include <doctest.h>

#include <random>
#include <stdexcept>

#include "flatpart/enumerate.hpp"
#include "flatpart/integers.hpp"
#include "flatpart/permutation.hpp"

using namespace flatpart;

namespace {

Permutation word(std::initializer_list<int> values) {
    return Permutation::from_word(std::vector<int>(values));
}

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    std::shuffle(w.begin(), w.end(), rng);
    return Permutation::unchecked(std::move(w));
}

}  // namespace

TEST_CASE("run decomposition splits at descents") {
    const auto rd = run_decompose(word({1, 3, 9, 2, 7, 8, 4, 5, 6}));
    REQUIRE(rd.count() == 3);
    CHECK(rd.runs[0] == std::vector<int>{1, 3, 9});
    CHECK(rd.runs[1] == std::vector<int>{2, 7, 8});
    CHECK(rd.runs[2] == std::vector<int>{4, 5, 6});
    CHECK(rd.starts() == std::vector<int>{1, 2, 4});

    CHECK(run_decompose(word({1, 2, 3})).runs ==
          std::vector<std::vector<int>>{{1, 2, 3}});

    // ascents at positions 2,4,5 and descents at 1,3 (1-based)
    const auto rd2 = run_decompose(word({5, 2, 6, 1, 3, 4}));
    CHECK(rd2.runs == std::vector<std::vector<int>>{{5}, {2, 6}, {1, 3, 4}});

    CHECK(run_decompose(Permutation()).count() == 0);
}

TEST_CASE("flattened predicate compares run starts") {
    CHECK(is_flattened(word({1, 3, 9, 2, 7, 8, 4, 5, 6})));
    CHECK_FALSE(is_flattened(word({1, 3, 9, 4, 5, 6, 2, 8, 7})));
    CHECK(is_flattened(word({1})));
    CHECK_FALSE(is_flattened(word({2, 1})));
}

TEST_CASE("right-to-left minima") {
    CHECK(right_to_left_minima(word({1, 2, 4, 6, 3, 5, 7})) ==
          std::vector<int>{1, 2, 3, 5, 7});
    CHECK(right_to_left_minima(word({1, 2, 3})) == std::vector<int>{1, 2, 3});
    CHECK(right_to_left_minima(word({3, 2, 1})) == std::vector<int>{1});
}

TEST_CASE("standardize replaces values by ranks") {
    CHECK(standardize({2, 4, 5}).word() == std::vector<int>{1, 2, 3});
    CHECK(standardize({4, 2, 6}).word() == std::vector<int>{2, 1, 3});
    CHECK(standardize({1, 3, 2}).word() == std::vector<int>{1, 3, 2});
    CHECK(standardize({}).word().empty());
    CHECK_THROWS_AS(standardize({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("permutation word validation") {
    CHECK_THROWS_AS(Permutation::from_word({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_word({1, 1}), std::invalid_argument);
    CHECK(Permutation::from_word({}).empty());
    CHECK(Permutation::identity(4).word() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("random permutations: statistics invariants") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Permutation p = random_permutation(n, rng);

        CHECK(run_decompose(p).count() == 1 + descent_count(p));
        CHECK(run_count(p) == run_decompose(p).count());

        const auto minima = right_to_left_minima(p);
        CHECK(std::is_sorted(minima.begin(), minima.end()));
        CHECK(minima.back() == p[n - 1]);

        CHECK(standardize(p.word()) == p);  // idempotent on permutations

        if (is_flattened(p)) {
            CHECK(p[0] == 1);
            // any value below a run start sits to its left
            std::vector<int> pos(n + 1);
            for (int i = 0; i < n; ++i) pos[p[i]] = i;
            for (int a : run_decompose(p).starts())
                for (int x = 1; x < a; ++x) CHECK(pos[x] < pos[a]);
        }
    }
}

TEST_CASE("standardize preserves relative order") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> value(-1000, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        std::vector<int> w;
        while (static_cast<int>(w.size()) < n) {
            const int v = value(rng);
            if (std::find(w.begin(), w.end(), v) == w.end()) w.push_back(v);
        }
        const Permutation s = standardize(w);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK((w[i] < w[j]) == (s[i] < s[j]));
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(17, 0) == 1);
    CHECK(binomial(6, 5) == 6);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(60, 30) == Integer("118264581564861424"));

    BinomialTable table(24);
    for (int n = 0; n <= 24; ++n)
        for (int k = 0; k <= n; ++k) CHECK(table.at(n, k) == binomial(n, k));
}

TEST_CASE("bell numbers from the triangle") {
    CHECK(bell(0) == 1);
    CHECK(bell(5) == 52);
    CHECK(bell(8) == 4140);
    const auto bells = bell_numbers(14);
    CHECK(bells[13] == Integer("27644437"));
    CHECK(bells[14] == Integer("190899322"));

    // cross-check against exhaustive set-partition counts
    for (int n = 0; n <= 8; ++n) {
        Integer count = 0;
        for_each_set_partition(n, [&](const SetPartition&) { count += 1; });
        CHECK(count == bells[n]);
    }
}
