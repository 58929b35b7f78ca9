#pragma once

#include <cstdint>
#include <string>

namespace cam {

// Exact rational arithmetic on int64 numerator/denominator.
// Invariants: den > 0, gcd(|num|, den) == 1.  All operations check for
// overflow of the reduced result and throw DomainError on failure, so a
// Rational never silently wraps.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "3", "-7/2"
    std::string str() const;

    // Exact conversion of a finite double (always a dyadic rational).
    // Throws DomainError if the exact value does not fit in int64/int64.
    static Rational from_double(double x);

    // Exact parse of decimal strings like "2.5", "-0.125", "3".
    static Rational from_decimal(const std::string& s);

private:
    static Rational make_checked(__int128 n, __int128 d);
    std::int64_t num_;
    std::int64_t den_;
};

struct RationalPoint {
    Rational x;
    Rational y;
    bool operator==(const RationalPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const RationalPoint& o) const { return !(*this == o); }
};

} // namespace cam
