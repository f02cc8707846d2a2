#include "flatpart/recurrences.hpp"

#include <stdexcept>
#include <string>

#include "flatpart/errors.hpp"

namespace flatpart {

namespace {

void require_nmax(int n_max) {
    if (n_max < 1) throw std::invalid_argument("triangle: n_max must be >= 1");
}

CountTriangle with_base(int n_max, const char* method) {
    CountTriangle t(method, 1);
    for (int n = 1; n <= n_max; ++n) {
        t.ensure_row(n);
        t.set(n, 1, 1);
    }
    return t;
}

}  // namespace

CountTriangle f_by_eq1(int n_max) {
    require_nmax(n_max);
    BinomialTable binom(n_max);
    CountTriangle t = with_base(n_max, "eq1");
    for (int n = 3; n <= n_max; ++n) {
        for (int k = 2; k < n; ++k) {
            Integer v = 0;
            for (int m = 1; m <= n - 2; ++m) {
                const Integer& c = t.value(m, k - 1);
                if (c != 0) v += (binom.at(n - 1, m) - 1) * c;
            }
            if (v != 0) t.set(n, k, v);
        }
    }
    t.trim();
    return t;
}

CountTriangle f_by_two_term(int n_max) {
    require_nmax(n_max);
    CountTriangle t = with_base(n_max, "two-term");
    for (int n = 3; n <= n_max; ++n) {
        for (int k = 2; k < n; ++k) {
            Integer v = k * t.value(n - 1, k) + (n - 2) * t.value(n - 2, k - 1);
            if (v != 0) t.set(n, k, v);
        }
    }
    t.trim();
    return t;
}

CountTriangle f_by_split(int n_max) {
    require_nmax(n_max);
    BinomialTable binom(n_max);
    CountTriangle t = with_base(n_max, "split");
    for (int n = 3; n <= n_max; ++n) {
        for (int k = 2; k < n; ++k) {
            Integer v = t.value(n - 1, k);
            for (int i = 1; i <= n - 2; ++i) {
                const Integer& c = t.value(n - 1 - i, k - 1);
                if (c != 0) v += binom.at(n - 2, i) * c;
            }
            if (v != 0) t.set(n, k, v);
        }
    }
    t.trim();
    return t;
}

std::vector<CorollaryViolation> check_corollary_identity(const CountTriangle& f, int n_max) {
    BinomialTable binom(n_max);
    std::vector<CorollaryViolation> out;
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 1; k < n; ++k) {
            Integer lhs = k * f.value(n, k);
            Integer rhs = 0;
            if (k >= 2)
                for (int m = 1; m <= n - 2; ++m) {
                    const Integer& c = f.value(m, k - 1);
                    if (c != 0) rhs += (binom.at(n, m) - 1) * c;
                }
            if (lhs != rhs) out.push_back({n, k, std::move(lhs), std::move(rhs)});
        }
    }
    return out;
}

MaxRunSequence max_runs(int n_max) {
    if (n_max < 0) throw std::invalid_argument("max_runs: n_max must be >= 0");
    std::vector<int> a(n_max + 2);
    for (int n = 0; n <= n_max + 1; ++n) a[n] = n < 2 ? n : a[n - 2] + 1;

    for (int n = 0; n <= n_max; ++n) {
        const int numerator = 2 * n + (n % 2 == 0 ? -1 : 1) + 1;
        if (numerator % 4 != 0)
            throw IntegrityError("max_runs: closed form not divisible by 4 at n = " +
                                 std::to_string(n));
        if (numerator / 4 != a[n])
            throw IntegrityError("max_runs: closed form disagrees with recurrence at n = " +
                                 std::to_string(n));
    }

    // Expansion of 1/((1-x)^2(1+x)) = 1/(1 - x - x^2 + x^3):
    // c_0 = 1, c_1 = 1, c_2 = 2, c_n = c_{n-1} + c_{n-2} - c_{n-3}.
    std::vector<long long> c(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        if (n == 0) c[n] = 1;
        else if (n == 1) c[n] = 1;
        else if (n == 2) c[n] = 2;
        else c[n] = c[n - 1] + c[n - 2] - c[n - 3];
    }
    bool plain = true, shifted = true;
    for (int n = 0; n <= n_max; ++n) {
        if (c[n] != a[n]) plain = false;
        if (c[n] != a[n + 1]) shifted = false;
    }
    if (!plain && !shifted)
        throw IntegrityError("max_runs: series expansion matches neither offset");

    MaxRunSequence seq;
    seq.values.assign(a.begin(), a.begin() + n_max + 1);
    seq.ogf_matches_shifted = !plain;
    return seq;
}

namespace {

Integer f_at(const CountTriangle& f, int m, int k) {
    if (k == 0) return m == 0 ? 1 : 0;  // edge convention
    if (m < 1 || k < 0) return 0;
    return f.value(m, k);
}

Integer paper_formula_rec(const CountTriangle& f, const BinomialTable& binom, int remaining,
                          int depth, int s, int k) {
    if (depth > s) return f_at(f, remaining, k - s);
    Integer total = 0;
    for (int i = 1; i <= remaining; ++i) {
        Integer inner = paper_formula_rec(f, binom, remaining - i, depth + 1, s, k);
        if (inner != 0) total += binom.at(remaining, i) * inner;
    }
    return total;
}

}  // namespace

Integer f_s_paper_formula(int n, int k, int s, const CountTriangle& f) {
    if (s < 1) throw std::invalid_argument("f_s_paper_formula: s must be >= 1");
    if (n < s || k < s) return 0;
    BinomialTable binom(n - s);
    return paper_formula_rec(f, binom, n - s, 1, s, k);
}

CountTriangle f_s_paper_triangle(int n_max, int s) {
    if (s < 1) throw std::invalid_argument("f_s_paper_triangle: s must be >= 1");
    require_nmax(n_max);
    CountTriangle f = f_by_two_term(n_max);
    CountTriangle t("s-printed", s);
    if (s >= 2 && s <= n_max) t.ensure_row(s);
    for (int n = s + 1; n <= n_max; ++n) {
        t.ensure_row(n);
        for (int k = s; k <= n; ++k) {
            Integer v = f_s_paper_formula(n, k, s, f);
            if (v != 0) t.set(n, k, v);
        }
    }
    t.trim();
    return t;
}

CountTriangle f_s_layered(int n_max, int s) {
    if (s < 1) throw std::invalid_argument("f_s_layered: s must be >= 1");
    require_nmax(n_max);
    CountTriangle cur = f_by_two_term(n_max);
    BinomialTable binom(n_max);
    for (int level = 2; level <= s; ++level) {
        CountTriangle next("s-layered", level);
        for (int m = 1; m <= n_max; ++m) {
            next.ensure_row(m);
            for (int k = level; k <= m; ++k) {
                Integer v = 0;
                for (int i = 1; i <= m - level; ++i) {
                    const Integer& c = cur.value(m - 1 - i, k - 1);
                    if (c != 0) v += binom.at(m - level, i) * c;
                }
                if (v != 0) next.set(m, k, v);
            }
        }
        next.trim();
        cur = std::move(next);
    }
    cur.set_method("s-layered");
    cur.set_s(s);
    return cur;
}

}  // namespace flatpart
