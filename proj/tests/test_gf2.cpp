#include <doctest.h>

#include <random>
#include <stdexcept>

#include "stabce/gf2.hpp"

using namespace stabce;

namespace {

GF2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    GF2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (coin(rng)) m.set(r, c);
    return m;
}

GF2Vector random_vector(std::size_t n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    GF2Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (coin(rng)) v.set(i);
    return v;
}

// Rank by exhaustive span counting: |row space| = 2^rank.
std::size_t brute_rank(const GF2Matrix& m) {
    std::vector<GF2Vector> span{GF2Vector(m.cols())};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto current = span;
        bool in_span = false;
        for (const auto& v : current) in_span = in_span || v == m.row(r);
        if (in_span) continue;
        for (const auto& v : current) span.push_back(v ^ m.row(r));
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size()) ++rank;
    return rank;
}

}  // namespace

TEST_CASE("rank examples") {
    CHECK(rank(GF2Matrix::identity(3)) == 3);
    CHECK(rank(GF2Matrix(2, 2)) == 0);
    CHECK(rank(GF2Matrix::from_strings({"0011", "0010"})) == 2);
    CHECK(rank(GF2Matrix(0, 5)) == 0);
    CHECK(rank(GF2Matrix(4, 0)) == 0);
}

TEST_CASE("kernel dimension examples") {
    CHECK(kernel_dim(GF2Matrix::identity(3)) == 0);
    CHECK(kernel_dim(GF2Matrix(2, 2)) == 2);
    CHECK(kernel_dim(GF2Matrix::from_strings({"11", "11"})) == 1);
}

TEST_CASE("matrix-vector examples") {
    const auto v = GF2Vector::from_string("1011");
    CHECK(mat_vec(GF2Matrix::identity(4), v) == v);
    CHECK(mat_vec(GF2Matrix(3, 4), v) == GF2Vector(3));
    CHECK(mat_vec(GF2Matrix::from_strings({"0011", "0010"}), GF2Vector::from_string("1010")) ==
          GF2Vector::from_string("11"));
    CHECK_THROWS_AS(mat_vec(GF2Matrix::identity(3), v), std::invalid_argument);
}

TEST_CASE("vector padding stays canonical") {
    GF2Vector v(70);
    v.set(69);
    v.set(3);
    CHECK(v.count() == 2);
    v ^= v;
    CHECK_FALSE(v.any());
    CHECK(GF2Vector::from_mask(~std::uint64_t{0}, 5).count() == 5);
    CHECK_THROWS_AS(v.get(70), std::out_of_range);
    CHECK_THROWS_AS(GF2Vector::from_string("012"), std::invalid_argument);
}

TEST_CASE("rank properties on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(0, 64);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_matrix(dim(rng), dim(rng), rng);
        const auto r = rank(m);
        CHECK(r <= std::min(m.rows(), m.cols()));
        CHECK(r == rank(m.transpose()));
        CHECK(kernel_dim(m) + r == m.cols());
    }
}

TEST_CASE("rank agrees with span enumeration on small matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> dim(0, 8);
    for (int trial = 0; trial < 300; ++trial) {
        const auto m = random_matrix(dim(rng), dim(rng), rng);
        CHECK(rank(m) == brute_rank(m));
    }
}

TEST_CASE("mat_vec is linear") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(17, 70, rng);
        const auto x = random_vector(70, rng);
        const auto y = random_vector(70, rng);
        CHECK(mat_vec(m, x ^ y) == (mat_vec(m, x) ^ mat_vec(m, y)));
    }
}
