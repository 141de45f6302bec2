#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace metriclab {

// Exact rational with 64-bit components. Comparisons and arithmetic go
// through 128-bit intermediates; overflow of a stored component throws.
struct Rat {
    std::int64_t num{0};
    std::int64_t den{1};  // always > 0, gcd(num, den) == 1

    Rat() = default;

    Rat(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        num = g ? n / g : n;
        den = g ? d / g : d;
    }

    static Rat integer(std::int64_t n) { return Rat{n, 1}; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make128(static_cast<__int128>(a.num) * b.num,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return make128(static_cast<__int128>(a.num) * b.den,
                       static_cast<__int128>(a.den) * b.num);
    }

    Rat abs() const { return num < 0 ? Rat{-num, den} : *this; }

    // a*d ? b*c comparison against a plain ratio of two other rationals:
    // (x/y) vs (u/v) handled by operator< already.

private:
    static Rat make128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        // gcd on 128-bit values
        __int128 a = an, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a) { n /= a; d /= a; }
        const auto lo = static_cast<std::int64_t>((static_cast<__int128>(1) << 62));
        if (n > lo || n < -static_cast<__int128>(lo) || d > lo)
            throw std::overflow_error("Rat: overflow");
        Rat r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }
};

}  // namespace metriclab
