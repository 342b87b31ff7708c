#include "rainbowlab/bounds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rainbowlab {

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

long long Rational::ceil_int() const {
    long long q = num / den;
    if (num > 0 && num % den != 0) ++q;
    return q;
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
}
bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
}

Rational claimed_bound(int n) {
    if (n < 1) throw std::invalid_argument("claimed_bound needs n >= 1");
    return Rational(11LL * n - 23, 4);
}

namespace {

// 2s^2 - (3n-6)s - n(n-1) >= 0, the counting inequality cleared of halves
inline bool eq3_satisfied(long long s, long long n) {
    return 2 * s * s - (3 * n - 6) * s - n * (n - 1) >= 0;
}

}  // namespace

Eq3Result eq3_min_s(int n) {
    if (n < 1) throw std::invalid_argument("eq3_min_s needs n >= 1");
    const double b = 1.5 * n - 3.0;
    const double disc = b * b + 2.0 * n * (n - 1.0);
    const double root = (b + std::sqrt(disc)) / 2.0;
    // certify the integer answer exactly; the float only seeds the scan
    long long s = std::llround(std::ceil(root));
    if (s < 1) s = 1;
    while (s > 1 && eq3_satisfied(s - 1, n)) --s;
    while (!eq3_satisfied(s, n)) ++s;
    return {root, s};
}

ReferenceBounds reference_bounds(int n) {
    if (n < 1) throw std::invalid_argument("reference_bounds needs n >= 1");
    ReferenceBounds r;
    r.axenovich = (1.0 + std::sqrt(5.0)) / 2.0 * n;
    r.toth = 2LL * n - 6;
    r.proper_case = 3LL * n - 7;
    r.lemma_value = (3LL * n + 1) / 2;
    return r;
}

std::vector<BoundsRow> bound_table(int n_from, int n_to) {
    if (n_from < 1 || n_from > n_to)
        throw std::invalid_argument("bound_table needs 1 <= n_from <= n_to");
    std::vector<BoundsRow> rows;
    rows.reserve(n_to - n_from + 1);
    for (int n = n_from; n <= n_to; ++n) {
        BoundsRow row;
        row.n = n;
        row.claimed = claimed_bound(n);
        row.claimed_ceil = row.claimed.ceil_int();
        auto eq3 = eq3_min_s(n);
        row.eq3_root = eq3.root;
        row.eq3_ceil = eq3.min_integer_s;
        auto ref = reference_bounds(n);
        row.axenovich = ref.axenovich;
        row.toth = ref.toth;
        row.proper_case = ref.proper_case;
        row.lemma_value = ref.lemma_value;
        row.discrepancy = row.claimed_ceil > row.eq3_ceil;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace rainbowlab
