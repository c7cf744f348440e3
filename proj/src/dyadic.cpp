#include "stabce/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace stabce {

namespace {

using u128 = unsigned __int128;
constexpr unsigned kBits = 128;

unsigned bit_width(u128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi != 0) return 64 + static_cast<unsigned>(std::bit_width(hi));
    return static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(v)));
}

u128 shift_up(u128 v, unsigned by) {
    if (v == 0) return 0;
    if (by >= kBits || bit_width(v) + by > kBits) {
        throw std::overflow_error("DyadicRational: numerator exceeds 128 bits");
    }
    return v << by;
}

u128 parse_u128(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("DyadicRational: empty integer");
    u128 v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("DyadicRational: bad digit in '" + text + "'");
        const u128 next = v * 10 + static_cast<unsigned>(c - '0');
        if (next / 10 != v) throw std::overflow_error("DyadicRational: integer too large");
        v = next;
    }
    return v;
}

}  // namespace

std::string to_decimal(unsigned __int128 value) {
    if (value == 0) return "0";
    std::string s;
    while (value != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

DyadicRational::DyadicRational(numerator_type numerator, unsigned log2_denominator)
    : numerator_(numerator), log2_den_(log2_denominator) {
    normalize();
    if (log2_den_ >= kBits) throw std::overflow_error("DyadicRational: denominator exceeds 2^127");
}

void DyadicRational::normalize() {
    if (numerator_ == 0) {
        log2_den_ = 0;
        return;
    }
    while (log2_den_ > 0 && (numerator_ & 1U) == 0) {
        numerator_ >>= 1;
        --log2_den_;
    }
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& rhs) {
    const unsigned den = std::max(log2_den_, rhs.log2_den_);
    const u128 a = shift_up(numerator_, den - log2_den_);
    const u128 b = shift_up(rhs.numerator_, den - rhs.log2_den_);
    if (a > ~u128{0} - b) throw std::overflow_error("DyadicRational: sum exceeds 128 bits");
    numerator_ = a + b;
    log2_den_ = den;
    normalize();
    return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& rhs) {
    const unsigned den = std::max(log2_den_, rhs.log2_den_);
    const u128 a = shift_up(numerator_, den - log2_den_);
    const u128 b = shift_up(rhs.numerator_, den - rhs.log2_den_);
    if (b > a) throw std::domain_error("DyadicRational: subtraction result is negative");
    numerator_ = a - b;
    log2_den_ = den;
    normalize();
    return *this;
}

DyadicRational DyadicRational::times(std::uint64_t factor) const {
    if (factor == 0 || numerator_ == 0) return {};
    if (numerator_ > ~u128{0} / factor) throw std::overflow_error("DyadicRational: product exceeds 128 bits");
    return DyadicRational(numerator_ * factor, log2_den_);
}

DyadicRational DyadicRational::halved(unsigned exponent) const {
    return DyadicRational(numerator_, log2_den_ + exponent);
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
    const unsigned den = std::max(a.log2_den_, b.log2_den_);
    // Compare a.num * 2^(den - a.den) with b.num * 2^(den - b.den) without overflow.
    const unsigned sa = den - a.log2_den_;
    const unsigned sb = den - b.log2_den_;
    const unsigned wa = a.numerator_ == 0 ? 0 : bit_width(a.numerator_) + sa;
    const unsigned wb = b.numerator_ == 0 ? 0 : bit_width(b.numerator_) + sb;
    if (wa != wb) return wa <=> wb;
    if (wa == 0) return std::strong_ordering::equal;
    // Equal bit widths: align to the top bit and compare.
    const unsigned top = std::max(bit_width(a.numerator_), bit_width(b.numerator_));
    const u128 x = a.numerator_ << (top - bit_width(a.numerator_));
    const u128 y = b.numerator_ << (top - bit_width(b.numerator_));
    return x <=> y;
}

std::string DyadicRational::to_string() const {
    if (log2_den_ == 0) return to_decimal(numerator_);
    return to_decimal(numerator_) + "/" + to_decimal(u128{1} << log2_den_);
}

double DyadicRational::to_double() const {
    return std::ldexp(static_cast<long double>(numerator_), -static_cast<int>(log2_den_));
}

std::string DyadicRational::to_decimal_string() const {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), to_double());
    return std::string(buf, ptr);
}

DyadicRational DyadicRational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return DyadicRational(parse_u128(text), 0);
    const u128 num = parse_u128(text.substr(0, slash));
    const u128 den = parse_u128(text.substr(slash + 1));
    if (den == 0 || (den & (den - 1)) != 0) {
        throw std::invalid_argument("DyadicRational: denominator of '" + text + "' is not a power of two");
    }
    return DyadicRational(num, bit_width(den) - 1);
}

}  // namespace stabce
