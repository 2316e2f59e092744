#ifndef CRYSTAL_RATIONAL_HPP
#define CRYSTAL_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace crystal {

// Exact rational on int64. Weights only ever hold small halves, and the
// dimension products stay far below 2^63 once reduced at every step.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a) { Rat r; r.num = -a.num; r.den = a.den; return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace crystal

#endif
