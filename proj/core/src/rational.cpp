#include "searchkit/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace searchkit {

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

}  // namespace

Rational Rational::from_int128(__int128 numerator, __int128 denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    __int128 g = gcd128(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    constexpr __int128 lo = std::numeric_limits<long long>::min();
    constexpr __int128 hi = std::numeric_limits<long long>::max();
    if (numerator < lo || numerator > hi || denominator > hi)
        throw std::overflow_error("rational arithmetic overflow");
    Rational r;
    r.num_ = static_cast<long long>(numerator);
    r.den_ = static_cast<long long>(denominator);
    return r;
}

Rational::Rational(long long numerator, long long denominator) {
    *this = from_int128(numerator, denominator);
}

Rational Rational::operator-() const {
    return from_int128(-static_cast<__int128>(num_), den_);
}

Rational Rational::operator+(const Rational &other) const {
    return from_int128(static_cast<__int128>(num_) * other.den_ +
                           static_cast<__int128>(other.num_) * den_,
                       static_cast<__int128>(den_) * other.den_);
}

Rational Rational::operator-(const Rational &other) const {
    return from_int128(static_cast<__int128>(num_) * other.den_ -
                           static_cast<__int128>(other.num_) * den_,
                       static_cast<__int128>(den_) * other.den_);
}

Rational Rational::operator*(const Rational &other) const {
    return from_int128(static_cast<__int128>(num_) * other.num_,
                       static_cast<__int128>(den_) * other.den_);
}

Rational Rational::operator/(const Rational &other) const {
    if (other.num_ == 0) throw std::domain_error("rational division by zero");
    return from_int128(static_cast<__int128>(num_) * other.den_,
                       static_cast<__int128>(den_) * other.num_);
}

bool Rational::operator<(const Rational &other) const {
    return static_cast<__int128>(num_) * other.den_ <
           static_cast<__int128>(other.num_) * den_;
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    long long num = 0;
    long long den = 1;
    const char *begin = text.data();
    const char *end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, num);
    if (ec != std::errc()) return std::nullopt;
    if (ptr != end) {
        if (*ptr != '/') return std::nullopt;
        auto [ptr2, ec2] = std::from_chars(ptr + 1, end, den);
        if (ec2 != std::errc() || ptr2 != end || den == 0) return std::nullopt;
    }
    return Rational(num, den);
}

}  // namespace searchkit
