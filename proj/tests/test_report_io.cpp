#include <doctest.h>

#include <sstream>

#include "flatpart/enumerate.hpp"
#include "flatpart/io.hpp"
#include "flatpart/recurrences.hpp"
#include "flatpart/reference_tables.hpp"
#include "flatpart/report.hpp"

using namespace flatpart;

TEST_CASE("discrepancy report: agreement is an empty report") {
    const DiscrepancyReport r = discrepancy_report(
        {{"eq1", f_by_eq1(8)}, {"two-term", f_by_two_term(8)}, {"split", f_by_split(8)}});
    CHECK(r.empty());
    CHECK(render_report_text(r) == "no discrepancies\n");
}

TEST_CASE("discrepancy report: stored two-start table against the enumeration") {
    const DiscrepancyReport r = discrepancy_report(
        {{"table2", reference_table2().values}, {"brute", count_s_run_bruteforce(9, 2)}});
    REQUIRE(r.findings.size() == 2);
    CHECK(r.findings[0].n == 7);
    CHECK(r.findings[0].k == 3);
    CHECK(r.findings[0].values ==
          std::vector<std::pair<std::string, Integer>>{{"table2", 106}, {"brute", 105}});
    CHECK(r.findings[1].n == 7);
    CHECK(r.findings[1].k == 4);
    CHECK(r.findings[1].values ==
          std::vector<std::pair<std::string, Integer>>{{"table2", 14}, {"brute", 15}});
}

TEST_CASE("discrepancy report: stored three-start table against the enumeration") {
    const DiscrepancyReport r = discrepancy_report(
        {{"table3", reference_table3().values}, {"brute", count_s_run_bruteforce(9, 3)}});
    REQUIRE(r.findings.size() == 1);
    CHECK(r.findings[0].n == 8);
    CHECK(r.findings[0].k == 4);
    CHECK(r.findings[0].values ==
          std::vector<std::pair<std::string, Integer>>{{"table3", 139}, {"brute", 140}});
}

TEST_CASE("discrepancy report: printed relation against the stored table includes (5,3)") {
    const DiscrepancyReport r = discrepancy_report(
        {{"printed-formula", f_s_paper_triangle(7, 2)}, {"table2", reference_table2().values}});
    CHECK_FALSE(r.empty());
    bool has_5_3 = false;
    for (const Finding& f : r.findings)
        if (f.n == 5 && f.k == 3) {
            has_5_3 = true;
            CHECK(f.values == std::vector<std::pair<std::string, Integer>>{
                                  {"printed-formula", 6}, {"table2", 3}});
        }
    CHECK(has_5_3);
}

TEST_CASE("discrepancy report: uncovered rows are not compared") {
    CountTriangle a("a", 1), b("b", 1);
    a.set(3, 1, 7);
    a.ensure_row(3);
    b.set(4, 1, 9);
    b.ensure_row(4);
    CHECK(discrepancy_report({{"a", a}, {"b", b}}).empty());

    b.set(3, 2, 5);  // now row 3 is shared and disagrees at k=1 and k=2
    b.ensure_row(3);
    const DiscrepancyReport r = discrepancy_report({{"a", a}, {"b", b}});
    CHECK(r.findings.size() == 2);
}

TEST_CASE("triangle csv round trip") {
    const CountTriangle t = f_by_two_term(9);
    std::ostringstream out;
    write_triangle_csv(out, t);
    CHECK(out.str().substr(0, 20) == "n,k,value\n1,1,1\n2,1,");

    std::istringstream in(out.str());
    const CountTriangle back = read_triangle_csv(in, "two-term", 1);
    CHECK(triangles_agree(t, back));
    CHECK(back.row_indices() == t.row_indices());
}

TEST_CASE("triangle jsonl round trip keeps provenance") {
    CountTriangle t = f_s_layered(7, 2);
    std::ostringstream out;
    write_triangle_jsonl(out, t);
    std::istringstream in(out.str());
    const CountTriangle back = read_triangle_jsonl(in);
    CHECK(back.method() == "s-layered");
    CHECK(back.s() == 2);
    CHECK(triangles_agree(t, back));
}

TEST_CASE("malformed ingestion raises io errors") {
    std::istringstream bad_csv("n,k,value\n1,zzz\n");
    CHECK_THROWS_AS(read_triangle_csv(bad_csv, "x", 1), IoError);
    std::istringstream bad_jsonl("{\"n\": 1}\n");
    CHECK_THROWS_AS(read_triangle_jsonl(bad_jsonl), IoError);
}

TEST_CASE("b-file rendering") {
    std::ostringstream out;
    write_bfile(out, {Integer(0), Integer(0), Integer(1), Integer(4)}, 0);
    CHECK(out.str() == "0 0\n1 0\n2 1\n3 4\n");

    std::ostringstream empty;
    write_bfile(empty, {}, 0);
    CHECK(empty.str().empty());
}

TEST_CASE("word and partition text forms") {
    CHECK(format_word(parse_word("139278456")) == "139278456");
    CHECK(format_word(parse_word("1 3 9 2 7 8 4 5 6")) == "139278456");
    const Permutation big = Permutation::identity(11);
    CHECK(format_word(big) == "1 2 3 4 5 6 7 8 9 10 11");
    CHECK(parse_word(format_word(big)) == big);

    CHECK(format_partition(parse_partition("12|3|45")) == "12|3|45");
    CHECK(format_partition(parse_partition("45|3|12")) == "12|3|45");  // canonicalized
    CHECK(parse_partition("").blocks.empty());
    CHECK_THROWS_AS(parse_partition("12|24"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("122"), std::invalid_argument);
}
