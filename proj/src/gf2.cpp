#include "stabce/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace stabce {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + GF2Vector::kWordBits - 1) / GF2Vector::kWordBits; }

}  // namespace

GF2Vector::GF2Vector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

GF2Vector GF2Vector::from_string(std::string_view bits) {
    GF2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("GF2Vector: expected '0' or '1', got '" + std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

GF2Vector GF2Vector::from_mask(std::uint64_t mask, std::size_t length) {
    if (length > kWordBits) {
        throw std::invalid_argument("GF2Vector::from_mask: length exceeds 64");
    }
    GF2Vector v(length);
    if (length > 0) {
        v.words_[0] = length == kWordBits ? mask : (mask & ((std::uint64_t{1} << length) - 1));
    }
    return v;
}

bool GF2Vector::get(std::size_t i) const {
    if (i >= length_) {
        throw std::out_of_range("GF2Vector::get: index out of range");
    }
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void GF2Vector::set(std::size_t i, bool value) {
    if (i >= length_) {
        throw std::out_of_range("GF2Vector::set: index out of range");
    }
    const word_type bit = word_type{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= bit;
    } else {
        words_[i / kWordBits] &= ~bit;
    }
}

void GF2Vector::flip(std::size_t i) {
    if (i >= length_) {
        throw std::out_of_range("GF2Vector::flip: index out of range");
    }
    words_[i / kWordBits] ^= word_type{1} << (i % kWordBits);
}

bool GF2Vector::any() const noexcept {
    for (auto w : words_) {
        if (w != 0) return true;
    }
    return false;
}

std::size_t GF2Vector::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

void GF2Vector::check_same_length(const GF2Vector& other) const {
    if (length_ != other.length_) {
        throw std::invalid_argument("GF2Vector: length mismatch (" + std::to_string(length_) + " vs " +
                                    std::to_string(other.length_) + ")");
    }
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& other) {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

GF2Vector& GF2Vector::operator&=(const GF2Vector& other) {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

bool GF2Vector::dot(const GF2Vector& other) const {
    check_same_length(other);
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
}

std::string GF2Vector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, GF2Vector(cols)) {}

GF2Matrix GF2Matrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) return GF2Matrix{};
    GF2Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw std::invalid_argument("GF2Matrix::from_strings: ragged rows");
        }
        m.data_[r] = GF2Vector::from_string(rows[r]);
    }
    return m;
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (data_[r].get(c)) t.set(c, r);
        }
    }
    return t;
}

std::vector<std::string> GF2Matrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (const auto& r : data_) out.push_back(r.to_string());
    return out;
}

std::size_t rank(const GF2Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;

    std::vector<GF2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < rows.size(); ++col) {
        const std::size_t word = col / GF2Vector::kWordBits;
        const GF2Vector::word_type bit = GF2Vector::word_type{1} << (col % GF2Vector::kWordBits);

        std::size_t found = pivot_row;
        while (found < rows.size() && (std::as_const(rows[found]).words()[word] & bit) == 0) ++found;
        if (found == rows.size()) continue;

        std::swap(rows[pivot_row], rows[found]);
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (std::as_const(rows[r]).words()[word] & bit) rows[r] ^= rows[pivot_row];
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t kernel_dim(const GF2Matrix& m) { return m.cols() - rank(m); }

GF2Vector mat_vec(const GF2Matrix& m, const GF2Vector& v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("mat_vec: vector length " + std::to_string(v.size()) +
                                    " does not match matrix columns " + std::to_string(m.cols()));
    }
    GF2Vector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m.row(r).dot(v)) out.set(r);
    }
    return out;
}

}  // namespace stabce
