#include <doctest.h>

#include "stabce/metrics.hpp"
#include "stabce/random_graphs.hpp"

using namespace stabce;

namespace {

Graph graph13() { return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}); }
DyadicRational q(const char* text) { return DyadicRational::parse(text); }
QubitSet labels(std::size_t n, std::vector<std::size_t> l) { return QubitSet::from_labels(n, l); }

}  // namespace

TEST_CASE("dyadic arithmetic") {
    CHECK(DyadicRational(42, 6) == q("21/32"));
    CHECK(q("21/32").to_string() == "21/32");
    CHECK(DyadicRational::one().to_string() == "1");
    CHECK(DyadicRational().to_string() == "0");
    CHECK(q("1/2") + q("1/4") == q("3/4"));
    CHECK(q("1") - q("3/4") == q("1/4"));
    CHECK(q("3/8").times(4) == q("3/2"));
    CHECK(q("3/2").halved(2) == q("3/8"));
    CHECK(q("1/4") < q("3/8"));
    CHECK(q("5/8") > q("1/2"));
    CHECK(q("0") < q("1/1024"));
    CHECK(q("21/32").to_double() == doctest::Approx(0.65625));
    CHECK_THROWS_AS(q("1/4") - q("1/2"), std::domain_error);
    CHECK_THROWS_AS(q("1/3"), std::invalid_argument);
    CHECK_THROWS_AS(DyadicRational(1, 0).halved(130), std::overflow_error);
}

TEST_CASE("purity examples") {
    const auto g = graph13();
    CHECK(purity(g, labels(6, {1, 2, 3, 5})) == q("1/4"));
    CHECK(purity(g, labels(6, {1, 2, 5})) == q("1/4"));
    CHECK(purity(g, QubitSet::full(6)) == q("1"));
    CHECK(purity(g, QubitSet(6)) == q("1"));
    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto h = random_connected_graph(2 + trial % 9, 0.3, rng);
        for (std::size_t a = 0; a < h.size(); ++a) CHECK(purity(h, QubitSet::from_indices(h.size(), {a})) == q("1/2"));
    }
}

TEST_CASE("schmidt rank examples") {
    CHECK(schmidt_rank(graph13(), labels(6, {1, 2, 3, 5})) == 2);
    CHECK(schmidt_rank(graph13(), QubitSet(6)) == 0);
    CHECK(schmidt_rank(Graph::family(Family::complete, 2), labels(2, {1})) == 1);
}

TEST_CASE("concentratable entanglement examples") {
    CHECK(concentratable_entanglement(graph13(), QubitSet::full(6)) == q("21/32"));
    CHECK(concentratable_entanglement_direct(graph13(), QubitSet::full(6)) == q("21/32"));
    CHECK(concentratable_entanglement(graph13(), labels(6, {3})) == q("1/4"));
    for (std::size_t n = 3; n <= 9; ++n) {
        const auto expected = q("1/2") - DyadicRational::inverse_power_of_two(static_cast<unsigned>(n));
        CHECK(concentratable_entanglement(Graph::family(Family::star, n), QubitSet::full(n)) == expected);
        CHECK(concentratable_entanglement(Graph::family(Family::complete, n), QubitSet::full(n)) == expected);
    }
    // Frozen from tests/oracles/dense_reference.py.
    CHECK(concentratable_entanglement(Graph::family(Family::linear, 4), QubitSet::full(4)) == q("1/2"));
    CHECK_THROWS_AS(concentratable_entanglement(graph13(), QubitSet(6)), std::invalid_argument);
}

TEST_CASE("rank index examples") {
    CHECK(rank_index(graph13(), 2).counts == std::vector<std::uint64_t>{12, 3});
    CHECK(rank_index(graph13(), 3).counts == std::vector<std::uint64_t>{4, 4, 2});
    CHECK(rank_index(Graph::family(Family::star, 4), 2).counts == std::vector<std::uint64_t>{0, 3});
    CHECK_THROWS_AS(rank_index(graph13(), 4), std::out_of_range);
    CHECK_THROWS_AS(rank_index(graph13(), 0), std::out_of_range);
}

TEST_CASE("bounds") {
    CHECK(ce_bounds(2).min == q("1/4"));
    CHECK(ce_bounds(2).max == q("1/4"));
    CHECK(ce_bounds(3).min == q("3/8"));
    CHECK(ce_bounds(3).max == q("3/8"));
    CHECK(ce_bounds(4).max == q("17/32"));
    CHECK(ce_bounds(5).max == q("5/8"));
    CHECK(ce_bounds(1).min == q("0"));
    CHECK_THROWS(ce_bounds(0));
}

TEST_CASE("snowflake closed form") {
    CHECK(snowflake_subset_ce(1) == q("1/4"));
    CHECK(snowflake_subset_ce(2) == q("7/16"));
    CHECK(snowflake_subset_ce(8) == q("1") - q("6561/65536"));
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto g = Graph::family(Family::snowflake, n);
        const QubitSet core(2 * n, (std::uint64_t{1} << n) - 1);
        CHECK(concentratable_entanglement(g, core) == snowflake_subset_ce(n));
        CHECK(concentratable_entanglement(g, core.complement()) == snowflake_subset_ce(n));
    }
}

TEST_CASE("purity spectrum of graph No. 13") {
    const auto spec = purity_spectrum(graph13());
    using T = std::vector<std::pair<DyadicRational, std::uint64_t>>;
    CHECK(spec.tally(1) == T{{q("1/2"), 6}});
    CHECK(spec.tally(2) == T{{q("1/2"), 3}, {q("1/4"), 12}});
    CHECK(spec.tally(3) == T{{q("1/2"), 2}, {q("1/4"), 4}, {q("1/8"), 4}});
    CHECK(spec.level_size(3) == 10);
    CHECK(purity_spectrum(Graph::family(Family::complete, 2)).tally(1) == T{{q("1/2"), 1}});
}

TEST_CASE("spectrum level sizes") {
    Rng rng(3);
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto spec = purity_spectrum(random_graph(n, 0.5, rng));
        for (std::size_t m = 0; m <= n / 2; ++m) {
            const auto expected = (2 * m == n && m > 0) ? binomial(n, m) / 2 : binomial(n, m);
            CHECK(spec.level_size(m) == expected);
        }
    }
}

TEST_CASE("Schmidt symmetry, exhaustive to n = 8") {
    Rng rng(17);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto g = random_graph(n, 0.5, rng);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                const QubitSet b(n, mask);
                REQUIRE(purity(g, b) == purity(g, b.complement()));
            }
        }
    }
}

TEST_CASE("purity bounds on connected graphs") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 9);
        const auto g = random_connected_graph(n, 0.3, rng);
        const auto b = random_subset(n, rng);
        if (b.empty() || b.size() == n) continue;
        const auto p = purity(g, b);
        CHECK(p <= q("1/2"));
        CHECK(p >= DyadicRational::inverse_power_of_two(static_cast<unsigned>(std::min(b.size(), n - b.size()))));
    }
}

TEST_CASE("spectrum shortcut agrees with direct power-set sum") {
    Rng rng(31);
    for (std::size_t n = 1; n <= 7; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = random_connected_graph(n, 0.4, rng);
            const auto full = QubitSet::full(n);
            const auto ce = concentratable_entanglement(g, full);
            CHECK(ce == concentratable_entanglement_direct(g, full));
            const auto b = ce_bounds(n);
            CHECK(b.min <= ce);
            CHECK(ce <= b.max);
        }
    }
}

TEST_CASE("ring beats linear from five qubits") {
    // Frozen from tests/oracles/dense_reference.py.
    const std::vector<std::pair<const char*, const char*>> expected{
        {"3/8", "3/8"},     {"1/2", "1/2"},     {"5/8", "19/32"},    {"45/64", "43/64"},
        {"49/64", "47/64"}, {"13/16", "201/256"}, {"435/512", "423/512"}};
    for (std::size_t n = 3; n <= 9; ++n) {
        const auto full = QubitSet::full(n);
        const auto ring = concentratable_entanglement(Graph::family(Family::ring, n), full);
        const auto linear = concentratable_entanglement(Graph::family(Family::linear, n), full);
        CHECK(ring == q(expected[n - 3].first));
        CHECK(linear == q(expected[n - 3].second));
        if (n <= 4) {
            CHECK(ring == linear);
        } else {
            CHECK(ring > linear);
        }
    }
}

TEST_CASE("ce report flags") {
    const auto rep = ce_report(Graph::family(Family::star, 5), QubitSet::full(5), "star5");
    CHECK(rep.achieves_min);
    CHECK_FALSE(rep.achieves_max);
    CHECK(rep.connected);
    const auto ring5 = ce_report(Graph::family(Family::ring, 5), QubitSet::full(5));
    CHECK(ring5.achieves_max);
    CHECK(maximally_entangled_everywhere(ring5.spectrum));
    const auto sub = ce_report(graph13(), labels(6, {1, 2}));
    CHECK_FALSE(sub.achieves_min);
    CHECK(sub.spectrum.rank_counts.empty());
}
