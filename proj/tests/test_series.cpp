#include <doctest.h>

#include "flatpart/errors.hpp"
#include "flatpart/integers.hpp"
#include "flatpart/recurrences.hpp"
#include "flatpart/series.hpp"

using namespace flatpart;

namespace {

XPoly int_poly(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long v : coeffs) c.emplace_back(v);
    return XPoly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic stays canonical") {
    const XPoly a = int_poly({1, 2});
    const XPoly b = int_poly({0, -2});
    CHECK((a + b) == int_poly({1}));
    CHECK((a - a).is_zero());
    CHECK((a * b) == int_poly({0, -2, -4}));
    CHECK(a.eval(3) == 7);
    CHECK(XPoly::monomial(2).degree() == 2);
    CHECK(int_poly({5}).degree() == 0);
}

TEST_CASE("series calculus identities") {
    const SeriesInU v = SeriesInU::exp_u_minus_1(10).scaled(int_poly({0, 1}));
    CHECK(v.integral().derivative() == v);

    const SeriesInU zero = SeriesInU::zero(10);
    CHECK((v * zero) == zero);

    // (e^u - 1)^2, coefficient of u^3
    const SeriesInU e1 = SeriesInU::exp_u_minus_1(8);
    CHECK((e1 * e1).coeff(3) == XPoly::constant(1));
    CHECK((e1 * e1).coeff(1).is_zero());
}

TEST_CASE("series exponential") {
    CHECK(series_exp(SeriesInU::zero(6)) == SeriesInU::one(6));

    const SeriesInU e = series_exp(SeriesInU::u(9));
    Rational inv_fact = 1;
    for (int m = 1; m <= 9; ++m) {
        inv_fact /= m;
        CHECK(e.coeff(m) == XPoly::constant(inv_fact));
    }

    CHECK_THROWS_AS(series_exp(SeriesInU::one(4)), std::invalid_argument);

    const SeriesInU g = SeriesInU::exp_u_minus_1(10).scaled(XPoly::monomial(1));
    const SeriesInU minus_g = SeriesInU::zero(10) - g;
    CHECK((series_exp(g) * series_exp(minus_g)) == SeriesInU::one(10));

    // exp(x(e^u - 1)) evaluated at x = 1 generates the Bell numbers
    const auto bells = bell_numbers(10);
    const SeriesInU bell_egf = series_exp(g);
    Rational fact = 1;
    for (int n = 0; n <= 10; ++n) {
        if (n > 0) fact *= n;
        CHECK(bell_egf.coeff(n).eval(1) * fact == Rational(bells[n]));
    }
}

TEST_CASE("run-distribution polynomials from the differential form") {
    const auto polys = egf_run_distribution(8);
    CHECK(polys[0] == XPoly::monomial(1));              // n = 1: x
    CHECK(polys[2] == int_poly({0, 1, 1}));             // n = 3: x + x^2
    CHECK(polys[5] == int_poly({0, 1, 26, 25}));        // n = 6
    CHECK(polys[6] == int_poly({0, 1, 57, 130, 15}));   // n = 7

    const CountTriangle tri = triangle_from_polys(polys, 1, 8, "egf", 1);
    CHECK(triangles_agree(tri, f_by_two_term(8)));
}

TEST_CASE("integer extraction guards") {
    CHECK_THROWS_AS(xpoly_integer_coeffs(XPoly::constant(Rational(1, 2))), IntegrityError);
    CHECK(xpoly_integer_coeffs(int_poly({0, 3})) == std::vector<Integer>{0, 3});
    CHECK_THROWS_AS(triangle_from_polys({XPoly::constant(1)}, 1, 5, "bad", 1), IntegrityError);
}

TEST_CASE("corrected refined series") {
    const auto s2 = egf_s_corrected(6, 2);
    CHECK(s2[3] == int_poly({0, 0, 7, 3}));    // length 5 row
    CHECK(s2[4] == int_poly({0, 0, 15, 22}));  // length 6 row
    const auto s3 = egf_s_corrected(4, 3);
    CHECK(s3[2] == int_poly({0, 0, 0, 2}));    // length 5 row

    // s = 1 reproduces the run distribution shifted by one index
    const auto direct = egf_run_distribution(7);
    const auto shifted = egf_s_corrected(6, 1);
    for (int m = 0; m <= 6; ++m) CHECK(shifted[m] == direct[m]);
}

TEST_CASE("printed refined series readings are emitted verbatim") {
    // the right side has valuation 2 in u when s = 2
    const auto direct = egf_s_as_printed_direct(5, 2);
    CHECK(direct[0].is_zero());
    CHECK(direct[1].is_zero());

    const auto integrated = egf_s_as_printed(5, 2);
    CHECK(integrated[1].is_zero());  // zero integration constants

    // s = 0 degenerates to the plain generating series
    const auto f = egf_s_as_printed(5, 0);
    CHECK(f[0] == XPoly::constant(1));
    CHECK(f[3] == int_poly({0, 1, 1}));
}

TEST_CASE("series expansion for the maximal run count") {
    const auto c = a_ogf_coeffs(20);
    CHECK(c[0] == 1);
    const std::vector<Integer> head(c.begin(), c.begin() + 6);
    CHECK(head == std::vector<Integer>{1, 1, 2, 2, 3, 3});

    const MaxRunSequence a = max_runs(21);
    for (int n = 0; n <= 20; ++n) CHECK(c[n] == a.at(n + 1));  // shifted by one
}
