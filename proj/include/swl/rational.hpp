#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace swl {

// Exact rational arithmetic for distance values. Backed by GMP, so values
// are always canonical (gcd-reduced, positive denominator) and never
// rounded. A configurable bit-length guard turns runaway growth into an
// error instead of unbounded memory use.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long num, long den = 1);

    static int bit_limit();
    static void set_bit_limit(int bits);

    Rational operator+(const Rational& o) const { return guarded(value_ + o.value_); }
    Rational operator-(const Rational& o) const { return guarded(value_ - o.value_); }
    Rational operator*(const Rational& o) const { return guarded(value_ * o.value_); }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return value_ == o.value_; }
    bool operator!=(const Rational& o) const { return value_ != o.value_; }
    bool operator<(const Rational& o) const { return value_ < o.value_; }
    bool operator<=(const Rational& o) const { return value_ <= o.value_; }
    bool operator>(const Rational& o) const { return value_ > o.value_; }
    bool operator>=(const Rational& o) const { return value_ >= o.value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    double to_double() const { return value_.get_d(); }

    // Always "num/den" with den >= 1, e.g. "4/1" or "-2/3".
    std::string str() const;

    // Canonical byte encoding: sign byte, numerator magnitude, denominator,
    // both length-prefixed little-endian. Used by certificate serialization.
    void encode(std::vector<uint8_t>& out) const;

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    static Rational guarded(mpq_class v);

    mpq_class value_;
};

}  // namespace swl
