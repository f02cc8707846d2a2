#include "flatpart/series.hpp"

#include <stdexcept>
#include <string>

#include "flatpart/errors.hpp"

namespace flatpart {

const Rational XPoly::zero_ = 0;

XPoly::XPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

XPoly XPoly::constant(Rational c) {
    XPoly p;
    if (c != 0) p.coeffs_ = {std::move(c)};
    return p;
}

XPoly XPoly::monomial(int degree, Rational c) {
    XPoly p;
    if (c != 0) {
        p.coeffs_.resize(degree + 1);
        p.coeffs_[degree] = std::move(c);
    }
    return p;
}

const Rational& XPoly::at(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_;
    return coeffs_[i];
}

Rational XPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
}

void XPoly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    canonicalize();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    canonicalize();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly();
    std::vector<Rational> out(a.degree() + b.degree() + 1);
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.at(i) == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) out[i + j] += a.at(i) * b.at(j);
    }
    return XPoly(std::move(out));
}

XPoly& XPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

SeriesInU SeriesInU::one(int order) {
    SeriesInU s(order);
    s.coeffs_[0] = XPoly::constant(1);
    return s;
}

SeriesInU SeriesInU::u(int order) {
    SeriesInU s(order);
    if (order >= 1) s.coeffs_[1] = XPoly::constant(1);
    return s;
}

SeriesInU SeriesInU::exp_u_minus_1(int order) {
    SeriesInU s(order);
    Rational inv_fact = 1;
    for (int m = 1; m <= order; ++m) {
        inv_fact /= m;
        s.coeffs_[m] = XPoly::constant(inv_fact);
    }
    return s;
}

SeriesInU operator+(const SeriesInU& a, const SeriesInU& b) {
    SeriesInU out(std::min(a.order(), b.order()));
    for (int m = 0; m <= out.order(); ++m) out.coeffs_[m] = a.coeff(m) + b.coeff(m);
    return out;
}

SeriesInU operator-(const SeriesInU& a, const SeriesInU& b) {
    SeriesInU out(std::min(a.order(), b.order()));
    for (int m = 0; m <= out.order(); ++m) out.coeffs_[m] = a.coeff(m) - b.coeff(m);
    return out;
}

SeriesInU operator*(const SeriesInU& a, const SeriesInU& b) {
    SeriesInU out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= out.order(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            out.coeffs_[i + j] += a.coeff(i) * b.coeff(j);
        }
    }
    return out;
}

SeriesInU SeriesInU::scaled(const XPoly& c) const {
    SeriesInU out(order());
    for (int m = 0; m <= order(); ++m) out.coeffs_[m] = coeffs_[m] * c;
    return out;
}

SeriesInU SeriesInU::derivative() const {
    SeriesInU out(order() > 0 ? order() - 1 : 0);
    for (int m = 0; m + 1 <= order() && m <= out.order(); ++m) {
        XPoly c = coeffs_[m + 1];
        c *= Rational(m + 1);
        out.coeffs_[m] = std::move(c);
    }
    return out;
}

SeriesInU SeriesInU::integral() const {
    SeriesInU out(order() + 1);
    for (int m = 1; m <= out.order(); ++m) {
        XPoly c = coeffs_[m - 1];
        c *= Rational(1, m);
        out.coeffs_[m] = std::move(c);
    }
    return out;
}

SeriesInU series_exp(const SeriesInU& g) {
    if (!g.coeff(0).is_zero())
        throw std::invalid_argument("series_exp: exponent must have zero constant term");
    const int order = g.order();
    SeriesInU e(order);
    e.set_coeff(0, XPoly::constant(1));
    // From E' = g'E: m E_m = sum_{j=1..m} j g_j E_{m-j}.
    for (int m = 1; m <= order; ++m) {
        XPoly acc;
        for (int j = 1; j <= m; ++j) {
            if (g.coeff(j).is_zero()) continue;
            XPoly term = g.coeff(j) * e.coeff(m - j);
            term *= Rational(j);
            acc += term;
        }
        acc *= Rational(1, m);
        e.set_coeff(m, std::move(acc));
    }
    return e;
}

std::vector<Integer> xpoly_integer_coeffs(const XPoly& p) {
    std::vector<Integer> out(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational& c = p.at(i);
        if (boost::multiprecision::denominator(c) != 1)
            throw IntegrityError("polynomial coefficient is not an integer: x^" +
                                 std::to_string(i));
        out[i] = boost::multiprecision::numerator(c);
    }
    return out;
}

namespace {

// V = x exp(x(e^u - 1) + u(1 - x)) at the given truncation order.
SeriesInU run_egf_series(int order) {
    SeriesInU g = SeriesInU::exp_u_minus_1(order).scaled(XPoly::monomial(1));
    XPoly one_minus_x = XPoly::constant(1) - XPoly::monomial(1);
    g = g + SeriesInU::u(order).scaled(one_minus_x);
    return series_exp(g).scaled(XPoly::monomial(1));
}

XPoly scaled_coeff(const SeriesInU& s, int m) {
    XPoly p = s.coeff(m);
    Rational f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    p *= f;
    return p;
}

SeriesInU x_exp_u_minus_1_pow(int order, int power) {
    SeriesInU acc = SeriesInU::one(order);
    const SeriesInU base = SeriesInU::exp_u_minus_1(order).scaled(XPoly::monomial(1));
    for (int i = 0; i < power; ++i) acc = acc * base;
    return acc;
}

}  // namespace

std::vector<XPoly> egf_run_distribution(int N) {
    if (N < 1) throw std::invalid_argument("egf_run_distribution: N must be >= 1");
    const SeriesInU v = run_egf_series(N);
    std::vector<XPoly> out;
    out.reserve(N);
    for (int n = 1; n <= N; ++n) {
        XPoly p = scaled_coeff(v, n - 1);
        xpoly_integer_coeffs(p);  // integrality gate
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<XPoly> egf_s_corrected(int N, int s) {
    if (N < 0) throw std::invalid_argument("egf_s_corrected: N must be >= 0");
    if (s < 1) throw std::invalid_argument("egf_s_corrected: s must be >= 1");
    const SeriesInU w = x_exp_u_minus_1_pow(N, s - 1) * run_egf_series(N);
    std::vector<XPoly> out;
    out.reserve(N + 1);
    for (int m = 0; m <= N; ++m) {
        XPoly p = scaled_coeff(w, m);
        xpoly_integer_coeffs(p);
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

SeriesInU printed_rhs(int N, int s) {
    // F carries the constant term 1 (the empty word) in addition to the
    // integral of V; the right side is (x(e^u-1))^s F.
    const SeriesInU f = SeriesInU::one(N + 1) + run_egf_series(N).integral();
    return x_exp_u_minus_1_pow(N, s) * f;
}

}  // namespace

std::vector<XPoly> egf_s_as_printed(int N, int s) {
    if (N < 0 || s < 0) throw std::invalid_argument("egf_s_as_printed: bad arguments");
    SeriesInU cand = s == 0 ? SeriesInU::one(N + 1) + run_egf_series(N).integral()
                            : printed_rhs(N, s);
    for (int i = 0; i < s; ++i) cand = cand.integral();
    std::vector<XPoly> out;
    out.reserve(N + 1);
    for (int n = 0; n <= N; ++n) out.push_back(scaled_coeff(cand, n));
    return out;
}

std::vector<XPoly> egf_s_as_printed_direct(int N, int s) {
    if (N < 0 || s < 1) throw std::invalid_argument("egf_s_as_printed_direct: bad arguments");
    const SeriesInU rhs = printed_rhs(N, s);
    std::vector<XPoly> out;
    out.reserve(N + 1);
    for (int n = 0; n <= N; ++n) out.push_back(scaled_coeff(rhs, n));
    return out;
}

std::vector<Integer> a_ogf_coeffs(int N) {
    if (N < 0) throw std::invalid_argument("a_ogf_coeffs: N must be >= 0");
    // 1/((1-x)^2(1+x)) = 1/(1 - x - x^2 + x^3), inverted term by term.
    const std::vector<Integer> den = {1, -1, -1, 1};
    std::vector<Integer> c(N + 1);
    for (int n = 0; n <= N; ++n) {
        Integer acc = n == 0 ? 1 : 0;
        for (std::size_t j = 1; j < den.size() && static_cast<int>(j) <= n; ++j)
            acc -= den[j] * c[n - j];
        c[n] = std::move(acc);
    }
    return c;
}

CountTriangle triangle_from_polys(const std::vector<XPoly>& polys, int first_n, int n_max,
                                  const std::string& method, int s) {
    CountTriangle t(method, s);
    for (std::size_t m = 0; m < polys.size(); ++m) {
        const int n = first_n + static_cast<int>(m);
        if (n < 1 || n > n_max) continue;
        t.ensure_row(n);
        const std::vector<Integer> coeffs = xpoly_integer_coeffs(polys[m]);
        if (!coeffs.empty() && coeffs[0] != 0)
            throw IntegrityError("run polynomial has a nonzero constant term at n = " +
                                 std::to_string(n));
        for (std::size_t k = 1; k < coeffs.size(); ++k)
            if (coeffs[k] != 0) t.set(n, static_cast<int>(k), coeffs[k]);
    }
    t.trim();
    return t;
}

}  // namespace flatpart
