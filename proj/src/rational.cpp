#include "cam/rational.hpp"

#include "cam/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace cam {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits_int64(__int128 v) {
    return v >= static_cast<__int128>(std::numeric_limits<std::int64_t>::min()) &&
           v <= static_cast<__int128>(std::numeric_limits<std::int64_t>::max());
}

} // namespace

Rational Rational::make_checked(__int128 n, __int128 d) {
    if (d == 0) throw DomainError("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits_int64(n) || !fits_int64(d)) throw DomainError("rational: overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    *this = make_checked(n, d);
}

Rational Rational::operator-() const {
    return make_checked(-static_cast<__int128>(num_), den_);
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return make_checked(n, d);
}

Rational Rational::operator-(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return make_checked(n, d);
}

Rational Rational::operator*(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return make_checked(n, d);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw DomainError("rational: division by zero");
    __int128 n = static_cast<__int128>(num_) * o.den_;
    __int128 d = static_cast<__int128>(den_) * o.num_;
    return make_checked(n, d);
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("rational: non-finite value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp); // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 bits of mantissa make the scaled value an exact integer.
    std::int64_t m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    while (m != 0 && (m & 1) == 0) {
        m >>= 1;
        ++exp;
    }
    if (exp >= 0) {
        if (exp > 62) throw DomainError("rational: overflow converting double");
        __int128 n = static_cast<__int128>(m) << exp;
        return make_checked(n, 1);
    }
    if (exp < -62) throw DomainError("rational: overflow converting double");
    return make_checked(m, static_cast<__int128>(1) << (-exp));
}

Rational Rational::from_decimal(const std::string& s) {
    if (s.empty()) throw DomainError("rational: empty decimal string");
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = (s[pos] == '-');
        ++pos;
    }
    __int128 mantissa = 0;
    int frac_digits = 0;
    bool seen_digit = false;
    bool seen_dot = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (seen_dot) throw DomainError("rational: bad decimal string '" + s + "'");
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            seen_digit = true;
            mantissa = mantissa * 10 + (c - '0');
            if (mantissa > (static_cast<__int128>(1) << 100))
                throw DomainError("rational: decimal string too long '" + s + "'");
            if (seen_dot) ++frac_digits;
        } else {
            throw DomainError("rational: bad decimal string '" + s + "'");
        }
    }
    if (!seen_digit) throw DomainError("rational: bad decimal string '" + s + "'");
    if (neg) mantissa = -mantissa;
    __int128 den = 1;
    for (int i = 0; i < frac_digits; ++i) den *= 10;
    return make_checked(mantissa, den);
}

} // namespace cam
