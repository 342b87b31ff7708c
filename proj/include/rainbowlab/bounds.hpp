#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rainbowlab {

// Exact rational with normalized sign and gcd; enough for the bound tables.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    long long ceil_int() const;
    double to_double() const { return double(num) / double(den); }
    std::string to_string() const;  // "p/q", or "p" when q == 1

    bool operator==(const Rational&) const = default;
};

bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);

// The claimed lower bound (11n - 23)/4, exactly.
Rational claimed_bound(int n);

// The positive root of s^2 - (3n/2 - 3)s - n(n-1)/2 >= 0 and the smallest
// integer s satisfying it.  The integer answer is certified by exact integer
// tests on s and s-1; the floating root is informational.
struct Eq3Result {
    double root;
    long long min_integer_s;
};
Eq3Result eq3_min_s(int n);

struct ReferenceBounds {
    double axenovich;       // ((1 + sqrt 5)/2) n
    long long toth;         // 2n - 6
    long long proper_case;  // 3n - 7
    long long lemma_value;  // ceil(3n/2)
};
ReferenceBounds reference_bounds(int n);

struct BoundsRow {
    int n;
    Rational claimed;
    long long claimed_ceil;
    double eq3_root;
    long long eq3_ceil;
    double axenovich;
    long long toth;
    long long proper_case;
    long long lemma_value;
    bool discrepancy;  // claimed_ceil > eq3_ceil
};

std::vector<BoundsRow> bound_table(int n_from, int n_to);

}  // namespace rainbowlab
