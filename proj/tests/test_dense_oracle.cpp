#include <doctest.h>

#include <cmath>

#include "stabce/dense_oracle.hpp"
#include "stabce/metrics.hpp"
#include "stabce/random_graphs.hpp"

using namespace stabce;
using namespace stabce::dense;

namespace {

Graph graph13() { return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}); }
QubitSet labels(std::size_t n, std::vector<std::size_t> l) { return QubitSet::from_labels(n, l); }

}  // namespace

TEST_CASE("build_state examples") {
    const auto one = build_state(Graph(1));
    CHECK(one.amplitudes[0].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(one.amplitudes[1].real() == doctest::Approx(1 / std::sqrt(2.0)));

    const auto k2 = build_state(Graph::family(Family::complete, 2));
    CHECK(k2.amplitudes[0].real() == doctest::Approx(0.5));
    CHECK(k2.amplitudes[1].real() == doctest::Approx(0.5));
    CHECK(k2.amplitudes[2].real() == doctest::Approx(0.5));
    CHECK(k2.amplitudes[3].real() == doctest::Approx(-0.5));

    const auto psi = build_state(graph13());
    CHECK(std::abs(psi.norm() - 1.0) < kStateTolerance);
    for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) {
        CHECK(std::abs(std::abs(psi.amplitudes[i]) - 0.125) < kStateTolerance);
    }
    // |111111>: all five edges have both ends set, odd parity.
    CHECK(psi.amplitudes[63].real() == doctest::Approx(-0.125));
    CHECK_THROWS_AS(build_state(Graph(15)), std::invalid_argument);
}

TEST_CASE("qubit 1 is the most significant bit") {
    // Qubit 1 alone in |1> via a single-qubit projection: |G> for K2 restricted.
    const auto psi = build_state(Graph(2));
    const auto projected = project_out(psi, 0, Outcome::minus);
    CHECK(projected.n == 1);
    CHECK(qubit_bit(2, 0) == 1);
    CHECK(qubit_bit(2, 1) == 0);
}

TEST_CASE("dense purity examples") {
    CHECK(dense_purity(build_state(Graph::family(Family::complete, 2)), labels(2, {1})) == doctest::Approx(0.5));
    CHECK(dense_purity(build_state(graph13()), labels(6, {1, 2, 5})) == doctest::Approx(0.25));
    CHECK(dense_purity(build_state(graph13()), QubitSet::full(6)) == doctest::Approx(1.0));
    CHECK(dense_purity(build_state(graph13()), QubitSet(6)) == doctest::Approx(1.0));
}

TEST_CASE("stabilizer eigenstate checks") {
    CHECK(check_stabilizer(graph13()));
    CHECK(check_stabilizer(Graph::family(Family::complete, 3)));
    auto gens = graph_generators(graph13()).generators();
    gens[2].negative = true;
    std::vector<std::size_t> owners{0, 1, 2, 3, 4, 5};
    CHECK_FALSE(stabilizes(StabilizerTableau(6, owners, gens), build_state(graph13())));
}

TEST_CASE("measurement rule checks") {
    const auto k2 = Graph::family(Family::complete, 2);
    CHECK(check_measurement_rule(k2, 0, Outcome::plus));
    CHECK(check_measurement_rule(k2, 0, Outcome::minus));

    const auto plus = project_out(build_state(k2), 0, Outcome::plus);
    CHECK(plus.amplitudes[0].real() == doctest::Approx(plus.amplitudes[1].real()));
    const auto minus = project_out(build_state(k2), 0, Outcome::minus);
    CHECK(minus.amplitudes[0].real() == doctest::Approx(-minus.amplitudes[1].real()));

    CHECK(check_measurement_rule(graph13(), 5, Outcome::minus));
    // Qubit 6 measured -1 leaves Z_3 |G - {6}>.
    const auto after = project_out(build_state(graph13()), 5, Outcome::minus);
    const auto expected = apply_z_string(labels(5, {3}), build_state(graph13().induced(labels(6, {1, 2, 3, 4, 5}))));
    CHECK(overlap(after, expected) == doctest::Approx(1.0));
}

TEST_CASE("lemma checks") {
    CHECK(check_lemma(graph13(), labels(6, {4, 6})));
    const auto a = labels(6, {4, 6});
    const auto psi = build_state(graph13());
    const auto s00 = project_out(psi, OutcomeBitstring::from_mask(a, 0b00));
    const auto s10 = project_out(psi, OutcomeBitstring::from_mask(a, 0b01));
    CHECK(overlap(s00, s00) == doctest::Approx(1.0));
    CHECK(overlap(s00, s10) < kCompareTolerance);

    const auto snow = Graph::family(Family::snowflake, 2);
    const auto pair = QubitSet::from_indices(4, {0, 2});
    CHECK(check_lemma(snow, pair));
    const auto sp = build_state(snow);
    CHECK(overlap(project_out(sp, OutcomeBitstring::from_mask(pair, 0b11)),
                  project_out(sp, OutcomeBitstring::from_mask(pair, 0b00))) < kCompareTolerance);
}

TEST_CASE("oracle equivalence on random graphs") {
    Rng rng(500);
    std::uniform_int_distribution<std::size_t> size(2, 10);
    for (int trial = 0; trial < 500; ++trial) {
        const auto g = random_connected_graph(size(rng), 0.35, rng);
        const auto b = random_subset(g.size(), rng);
        REQUIRE(std::abs(dense_purity(build_state(g), b) - purity(g, b).to_double()) <= kCompareTolerance);
    }
}

TEST_CASE("multiplicity law and reconstruction") {
    Rng rng(77);
    std::uniform_int_distribution<std::size_t> size(2, 9);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_connected_graph(size(rng), 0.4, rng);
        const auto a = random_subset_of_size(g.size(), 1 + static_cast<std::size_t>(trial) % std::min<std::size_t>(6, g.size()), rng);
        const auto counts = projected_state_multiplicities(g, a);
        const auto k = count_distinct_sets(g, a);
        CHECK(counts.size() == k);
        for (auto c : counts) CHECK(c * k == (std::size_t{1} << a.size()));
        CHECK(reconstruction_error(g, a) <= kCompareTolerance);
    }
}
