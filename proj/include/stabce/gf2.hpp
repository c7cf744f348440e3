#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabce {

/// Dense bit vector over GF(2). Bits past `size()` are always zero.
class GF2Vector {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    GF2Vector() = default;
    explicit GF2Vector(std::size_t length);

    /// Parse a string of '0' / '1' characters.
    static GF2Vector from_string(std::string_view bits);
    /// Low `length` bits of `mask`, bit i of the mask is entry i.
    static GF2Vector from_mask(std::uint64_t mask, std::size_t length);

    std::size_t size() const noexcept { return length_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    bool any() const noexcept;
    std::size_t count() const noexcept;

    GF2Vector& operator^=(const GF2Vector& other);
    friend GF2Vector operator^(GF2Vector lhs, const GF2Vector& rhs) {
        lhs ^= rhs;
        return lhs;
    }
    GF2Vector& operator&=(const GF2Vector& other);

    /// Parity of the bitwise AND.
    bool dot(const GF2Vector& other) const;

    std::span<const word_type> words() const noexcept { return words_; }

    std::string to_string() const;

    friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
    friend auto operator<=>(const GF2Vector&, const GF2Vector&) = default;

private:
    void check_same_length(const GF2Vector& other) const;

    std::size_t length_ = 0;
    std::vector<word_type> words_;
};

/// Dense row-major bit matrix over GF(2).
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);
    /// Build from rows written as '0'/'1' strings; all rows must share a length.
    static GF2Matrix from_strings(const std::vector<std::string>& rows);
    static GF2Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_.at(r).get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_.at(r).set(c, value); }

    const GF2Vector& row(std::size_t r) const { return data_.at(r); }
    GF2Vector& row(std::size_t r) { return data_.at(r); }

    GF2Matrix transpose() const;

    std::vector<std::string> to_strings() const;

    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GF2Vector> data_;
};

/// Row rank by Gaussian elimination on a private copy. Empty matrices have rank 0.
std::size_t rank(const GF2Matrix& m);

/// cols - rank.
std::size_t kernel_dim(const GF2Matrix& m);

/// Throws std::invalid_argument when v.size() != m.cols().
GF2Vector mat_vec(const GF2Matrix& m, const GF2Vector& v);

}  // namespace stabce
