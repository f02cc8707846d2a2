#include <doctest.h>

#include <algorithm>
#include <set>

#include "flatpart/enumerate.hpp"
#include "flatpart/errors.hpp"
#include "flatpart/io.hpp"
#include "flatpart/recurrences.hpp"

using namespace flatpart;

namespace {

std::vector<std::string> partition_strings(int n) {
    std::vector<std::string> out;
    for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(format_partition(p)); });
    return out;
}

std::vector<std::string> word_strings(const std::vector<Permutation>& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(format_word(w));
    return out;
}

}  // namespace

TEST_CASE("set partitions enumerate in restricted-growth order") {
    CHECK(partition_strings(3) ==
          std::vector<std::string>{"123", "12|3", "13|2", "1|23", "1|2|3"});
    CHECK(partition_strings(0) == std::vector<std::string>{""});
    CHECK(gen_set_partitions(5).size() == 52);
    for (const SetPartition& p : gen_set_partitions(4)) {
        CHECK(p.ground_size() == 4);
        CHECK(SetPartition::from_blocks(p.blocks) == p);  // already canonical
    }
}

TEST_CASE("filter generator yields flattened words in lexicographic order") {
    CHECK(word_strings(gen_flattened_filter(4)) ==
          std::vector<std::string>{"1234", "1243", "1324", "1342", "1423"});
    CHECK(word_strings(gen_flattened_filter(1)) == std::vector<std::string>{"1"});
    CHECK(gen_flattened_filter(6).size() == 52);
}

TEST_CASE("filter generator bounds") {
    CHECK_THROWS_WITH_AS(static_cast<void>(gen_flattened_filter(10)),
                         doctest::Contains("bound 9"), InfeasibleError);
    CHECK(gen_flattened_filter(10, kDefaultOracleBound, true).size() == 21147);  // Bell(9)
    CHECK_THROWS_AS(static_cast<void>(gen_flattened_filter(13, 13, true)), ResourceLimitError);
}

TEST_CASE("partition-image generator matches the filter oracle as a set") {
    CHECK(word_strings(gen_flattened_bijective(1)) == std::vector<std::string>{"1"});
    for (int n = 1; n <= 8; ++n) {
        std::vector<Permutation> filter = gen_flattened_filter(n);
        std::vector<Permutation> bij = gen_flattened_bijective(n);
        CHECK(filter.size() == bij.size());
        std::sort(bij.begin(), bij.end());
        CHECK(filter == bij);
    }
}

TEST_CASE("brute-force run triangle") {
    const CountTriangle t = count_triangle_bruteforce(9);
    CHECK(t.value(5, 2) == 11);
    CHECK(t.value(6, 3) == 25);
    CHECK(t.value(7, 1) == 1);
    CHECK(t.value(7, 2) == 57);
    CHECK(t.value(7, 3) == 130);
    CHECK(t.value(7, 4) == 15);
    CHECK(t.row_length(7) == 4);

    const auto bells = bell_numbers(8);
    const MaxRunSequence a = max_runs(9);
    for (int n = 1; n <= 9; ++n) {
        CHECK(t.row_sum(n) == bells[n - 1]);
        CHECK(t.max_nonzero_k(n) == a.at(n));
    }
}

TEST_CASE("classification against the printed n=5, k=2 sets") {
    std::vector<std::string> k_set, l_set, c_set;
    for (const Permutation& w : gen_flattened_filter(5)) {
        if (run_count(w) != 2) continue;
        const FlattenedClass fc = classify_ckl(w);
        (fc.kl == KLClass::K ? k_set : l_set).push_back(format_word(w));
        if (fc.in_c) c_set.push_back(format_word(w));
    }
    CHECK(k_set == std::vector<std::string>{"12435", "12453", "13245", "13425", "13452",
                                            "13524", "14235", "14523"});
    CHECK(l_set == std::vector<std::string>{"12354", "12534", "15234"});
    CHECK(c_set == std::vector<std::string>{"13245", "14235", "15234"});
}

TEST_CASE("classification rejects bad input") {
    CHECK_THROWS_AS(classify_ckl(Permutation::from_word({1, 4, 3, 2, 5})), std::invalid_argument);
    CHECK_THROWS_AS(classify_ckl(Permutation::from_word({1})), std::invalid_argument);
}

TEST_CASE("s-run property") {
    CHECK(s_run_property({1, 5, 2, 3, 4}, 2));        // 2 starts the second run
    CHECK_FALSE(s_run_property({1, 2, 3, 5, 4}, 2));  // 1 and 2 share a run
    CHECK(s_run_property({1, 4, 2, 5, 3}, 3));
    CHECK_FALSE(s_run_property({1, 2}, 3));  // too short
    CHECK(s_run_property({1}, 1));
}

TEST_CASE("s-run brute-force triangles") {
    const CountTriangle t2 = count_s_run_bruteforce(7, 2);
    CHECK(t2.value(5, 2) == 7);
    CHECK(t2.value(6, 3) == 22);
    CHECK(t2.value(6, 2) == 15);
    CHECK(t2.value(3, 2) == 1);
    // row 7 as recounted here, against the stored reference deltas
    CHECK(t2.value(7, 2) == 31);
    CHECK(t2.value(7, 3) == 105);
    CHECK(t2.value(7, 4) == 15);

    const CountTriangle t3 = count_s_run_bruteforce(8, 3);
    CHECK(t3.value(5, 3) == 2);
    CHECK(t3.value(6, 3) == 12);
    CHECK(t3.value(7, 3) == 50);
    CHECK(t3.value(7, 4) == 12);
    CHECK(t3.value(8, 3) == 180);
    CHECK(t3.value(8, 4) == 140);

    const CountTriangle t1 = count_s_run_bruteforce(8, 1);
    CHECK(triangles_agree(t1, count_triangle_bruteforce(8)));
}
