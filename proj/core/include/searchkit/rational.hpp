#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace searchkit {

// Exact rational number on 64-bit numerator/denominator, always kept
// reduced with a positive denominator. Arithmetic goes through 128-bit
// intermediates and throws std::overflow_error if a reduced result does
// not fit; game states at desk scale stay far below that.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(long long numerator, long long denominator);

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational &other) const;
    Rational operator-(const Rational &other) const;
    Rational operator*(const Rational &other) const;
    // Throws std::domain_error on division by zero; callers in the 24-game
    // successor function skip zero divisors instead.
    Rational operator/(const Rational &other) const;

    bool operator==(const Rational &other) const {
        return num_ == other.num_ && den_ == other.den_;
    }
    bool operator!=(const Rational &other) const { return !(*this == other); }
    bool operator<(const Rational &other) const;
    bool operator<=(const Rational &other) const { return *this < other || *this == other; }
    bool operator>(const Rational &other) const { return other < *this; }
    bool operator>=(const Rational &other) const { return other <= *this; }

    // "7", "-3", "2/3", "-5/4". Reduced form, denominator omitted when 1.
    std::string str() const;
    static std::optional<Rational> parse(std::string_view text);

private:
    static Rational from_int128(__int128 numerator, __int128 denominator);

    long long num_;
    long long den_;
};

}  // namespace searchkit
