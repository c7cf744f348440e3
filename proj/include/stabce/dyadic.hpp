#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace stabce {

/// Exact non-negative value numerator / 2^log2_denominator, kept in lowest
/// terms (numerator odd, or zero with exponent 0). Arithmetic throws
/// std::overflow_error rather than lose bits, and subtraction throws
/// std::domain_error when the result would be negative.
class DyadicRational {
public:
    using numerator_type = unsigned __int128;

    constexpr DyadicRational() = default;
    DyadicRational(numerator_type numerator, unsigned log2_denominator);

    static DyadicRational one() { return DyadicRational(1, 0); }
    static DyadicRational zero() { return DyadicRational(); }
    /// 2^-exponent.
    static DyadicRational inverse_power_of_two(unsigned exponent) { return DyadicRational(1, exponent); }

    numerator_type numerator() const noexcept { return numerator_; }
    unsigned log2_denominator() const noexcept { return log2_den_; }
    bool is_zero() const noexcept { return numerator_ == 0; }

    DyadicRational& operator+=(const DyadicRational& rhs);
    DyadicRational& operator-=(const DyadicRational& rhs);
    friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) { return a += b; }
    friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) { return a -= b; }

    /// Multiply by a non-negative integer.
    DyadicRational times(std::uint64_t factor) const;
    /// Divide by 2^exponent.
    DyadicRational halved(unsigned exponent = 1) const;

    friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
    friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

    /// "p/2^q" written with the denominator expanded, e.g. "21/32"; integers print bare.
    std::string to_string() const;
    /// Shortest round-trip decimal of the nearest double.
    std::string to_decimal_string() const;
    double to_double() const;

    /// Inverse of to_string: "p/q" with q a power of two, or an integer.
    static DyadicRational parse(const std::string& text);

private:
    void normalize();

    numerator_type numerator_ = 0;
    unsigned log2_den_ = 0;
};

/// Decimal rendering of a 128-bit unsigned integer.
std::string to_decimal(unsigned __int128 value);

}  // namespace stabce
