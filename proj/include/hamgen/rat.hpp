#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "hamgen/errors.hpp"

namespace hamgen {

// Exact rational arithmetic on int64 numerator/denominator. All inequality
// ledgers in the classification module are evaluated with this type; no
// floating point enters any verdict. Magnitudes here stay tiny (vertex
// counts and edge counts at desk scale), so int64 with __int128 cross
// products is plenty.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}  // NOLINT: intentionally implicit
    Rat(long long n, long long d) : num(n), den(d) {
        if (den == 0) fail(ErrorCode::BadSizes, "rational with zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num == 0) fail(ErrorCode::BadSizes, "rational division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    Rat operator-() const { return Rat(-num, den); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
};

}  // namespace hamgen
