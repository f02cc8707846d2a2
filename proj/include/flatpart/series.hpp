#pragma once

// Exact truncated power series in u whose coefficients are polynomials in
// x with rational coefficients. Series store plain u^m coefficients; the
// factorial scaling of an exponential generating function happens only at
// extraction time.

#include <vector>

#include "flatpart/integers.hpp"
#include "flatpart/triangle.hpp"

namespace flatpart {

inline constexpr int kDefaultEgfOrder = 16;

// Dense polynomial in x over the rationals, canonical form (no trailing
// zero coefficient).
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<Rational> coeffs);
    static XPoly constant(Rational c);
    static XPoly monomial(int degree, Rational c = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& at(int i) const;  // 0 beyond the degree
    Rational eval(const Rational& x) const;

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly& operator*=(const Rational& c);
    friend bool operator==(const XPoly&, const XPoly&) = default;

private:
    void canonicalize();
    std::vector<Rational> coeffs_;
    static const Rational zero_;
};

// Truncated series sum_{m=0..order} c_m(x) u^m.
class SeriesInU {
public:
    explicit SeriesInU(int order) : coeffs_(order + 1) {}
    static SeriesInU zero(int order) { return SeriesInU(order); }
    static SeriesInU one(int order);
    static SeriesInU u(int order);
    static SeriesInU exp_u_minus_1(int order);  // e^u - 1

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const XPoly& coeff(int m) const { return coeffs_[m]; }
    void set_coeff(int m, XPoly c) { coeffs_[m] = std::move(c); }

    // Binary operations truncate to the smaller order.
    friend SeriesInU operator+(const SeriesInU& a, const SeriesInU& b);
    friend SeriesInU operator-(const SeriesInU& a, const SeriesInU& b);
    friend SeriesInU operator*(const SeriesInU& a, const SeriesInU& b);
    SeriesInU scaled(const XPoly& c) const;

    SeriesInU derivative() const;  // order drops by one
    SeriesInU integral() const;    // order grows by one, constant term 0

    friend bool operator==(const SeriesInU&, const SeriesInU&) = default;

private:
    std::vector<XPoly> coeffs_;
};

// exp of a series with zero constant term: E(0) = 1 and E' = g'E, built
// term by term. Throws std::invalid_argument on a nonzero constant term.
SeriesInU series_exp(const SeriesInU& g);

// Converts one polynomial coefficient to the exact integers it must hold;
// throws IntegrityError if any coefficient has denominator != 1.
std::vector<Integer> xpoly_integer_coeffs(const XPoly& p);

// The closed differential form of the run-distribution EGF:
//   V = x * exp(x(e^u - 1) + u(1 - x)),
// returning the polynomials p_n(x) = (n-1)! [u^{n-1}] V for n = 1..N.
// Every p_n must clear to integer coefficients (IntegrityError otherwise).
std::vector<XPoly> egf_run_distribution(int N);

// Oracle-consistent s-run series (x(e^u-1))^{s-1} * V; entry m holds
// m! [u^m], the run polynomial of the s-run count for length m+s.
// s = 1 reproduces egf_run_distribution shifted by one index.
std::vector<XPoly> egf_s_corrected(int N, int s);

// The s-run differential form exactly as printed: the candidate series
// must satisfy d^s/du^s candidate = (x(e^u-1))^s * F with F = 1 + integral
// of V. Two readings are produced, neither corrected:
//   integrated — antidifferentiate the right side s times with zero
//     constants and read entry n as n! [u^n] (s = 0 degenerates to F);
//   direct — treat the right side itself as the series of the counts.
std::vector<XPoly> egf_s_as_printed(int N, int s);
std::vector<XPoly> egf_s_as_printed_direct(int N, int s);

// First N+1 Taylor coefficients of 1/((1-x)^2(1+x)) by exact division.
// Coefficient n equals the maximal run count for length n+1, i.e. the
// published form is offset by one from the sequence it accompanies.
std::vector<Integer> a_ogf_coeffs(int N);

// Rows n = first_n.. of a triangle out of m!-scaled polynomials, entry m
// mapping to row first_n + m; the x^0 coefficient of every entry must be
// zero (IntegrityError otherwise).
CountTriangle triangle_from_polys(const std::vector<XPoly>& polys, int first_n, int n_max,
                                  const std::string& method, int s);

}  // namespace flatpart
