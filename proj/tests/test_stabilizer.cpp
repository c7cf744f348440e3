#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "stabce/random_graphs.hpp"
#include "stabce/stabilizer.hpp"

using namespace stabce;

namespace {

Graph graph13() { return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}); }

QubitSet labels(std::size_t n, std::vector<std::size_t> l) { return QubitSet::from_labels(n, l); }

std::vector<std::string> rendered(const StabilizerTableau& t) {
    std::vector<std::string> out;
    for (const auto& g : t.generators()) out.push_back(g.to_string());
    return out;
}

}  // namespace

TEST_CASE("graph generators") {
    const auto t = graph_generators(graph13());
    CHECK(t.generator_for(2).to_string() == "Z_2 X_3 Z_4 Z_6");
    CHECK(rendered(graph_generators(Graph::family(Family::complete, 2))) ==
          std::vector<std::string>{"X_1 Z_2", "Z_1 X_2"});
    CHECK(rendered(graph_generators(Graph(1))) == std::vector<std::string>{"X_1"});
    CHECK(t.all_commute());
    CHECK(t.independent());
}

TEST_CASE("measure_z follows the generator update rule") {
    auto t = measure_z(graph_generators(graph13()), 3, Outcome::minus);
    t = measure_z(t, 5, Outcome::plus);
    CHECK(rendered(t) ==
          std::vector<std::string>{"X_1 Z_2", "Z_1 X_2 Z_3", "-Z_2 X_3", "-Z_4", "-X_5", "Z_6"});
    CHECK(t.all_commute());
    CHECK(t.independent());
    CHECK_THROWS_AS(measure_z(t, 3, Outcome::plus), std::logic_error);

    const auto k2 = measure_z(graph_generators(Graph::family(Family::complete, 2)), 0, Outcome::minus);
    CHECK(rendered(k2) == std::vector<std::string>{"-Z_1", "-X_2"});

    // Isolated qubit: only its own generator changes.
    const Graph iso = Graph::from_edges(3, {{0, 1}});
    const auto before = graph_generators(iso);
    const auto after = measure_z(before, 2, Outcome::plus);
    CHECK(after.generators()[0] == before.generators()[0]);
    CHECK(after.generators()[1] == before.generators()[1]);
    CHECK(after.generators()[2].to_string() == "Z_3");
}

TEST_CASE("unitary support") {
    const auto g = graph13();
    const auto a = labels(6, {4, 6});
    CHECK_FALSE(unitary_support(g, a, OutcomeBitstring::from_mask(a, 0)).any());
    // z_4 = 1, z_6 = 0 flips S_3 and S_5 (B = {1,2,3,5}).
    CHECK(unitary_support(g, a, OutcomeBitstring::from_mask(a, 0b01)) == GF2Vector::from_string("0011"));
    const auto k2 = Graph::family(Family::complete, 2);
    CHECK(unitary_support(k2, labels(2, {1}), OutcomeBitstring::from_mask(labels(2, {1}), 1)) ==
          GF2Vector::from_string("1"));
    CHECK_THROWS_AS(unitary_support(g, a, OutcomeBitstring::from_mask(labels(6, {4}), 0)), std::invalid_argument);
}

TEST_CASE("traced generator sets for graph No. 13") {
    const auto g = graph13();
    const auto a = labels(6, {4, 6});
    auto signs = [&](std::uint64_t z) {
        const auto t = traced_generator_set(g, a, OutcomeBitstring::from_mask(a, z));
        return std::make_pair(t.generator_for(2).negative, t.generator_for(4).negative);
    };
    // Outcome bits: bit 0 is qubit 4, bit 1 is qubit 6.
    CHECK(signs(0b00) == std::make_pair(false, false));
    CHECK(signs(0b10) == std::make_pair(true, false));
    CHECK(signs(0b01) == std::make_pair(true, true));
    CHECK(signs(0b11) == std::make_pair(false, true));

    const auto t = traced_generator_set(g, a, OutcomeBitstring::from_mask(a, 0b01));
    CHECK(rendered(t) == std::vector<std::string>{"X_1 Z_2", "Z_1 X_2 Z_3", "-Z_2 X_3", "-X_5"});

    CHECK(traced_generator_set(g, QubitSet(6), OutcomeBitstring::from_mask(QubitSet(6), 0)) ==
          graph_generators(g));
}

TEST_CASE("snowflake pair trace-out has two sets") {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto g = Graph::family(Family::snowflake, n);
        const auto a = QubitSet::from_indices(2 * n, {0, n});
        const auto s11 = traced_generator_set(g, a, OutcomeBitstring::from_mask(a, 0b11));
        const auto s00 = traced_generator_set(g, a, OutcomeBitstring::from_mask(a, 0b00));
        CHECK_FALSE(s11 == s00);
        CHECK(count_distinct_sets(g, a) == 2);
        CHECK(count_distinct_sets_fast(g, a) == 2);
    }
}

TEST_CASE("distinct set counts") {
    const auto g = graph13();
    CHECK(count_distinct_sets(g, labels(6, {4, 6})) == 4);
    CHECK(count_distinct_sets(g, labels(6, {3, 4, 6})) == 4);
    CHECK(count_distinct_sets_fast(g, labels(6, {4, 6})) == 4);
    CHECK(count_distinct_sets_fast(g, QubitSet(6)) == 1);
    for (std::size_t a = 0; a < 6; ++a) CHECK(count_distinct_sets(g, QubitSet::from_indices(6, {a})) == 2);
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto star = Graph::family(Family::star, n);
        CHECK(count_distinct_sets_fast(star, QubitSet(n, ((std::uint64_t{1} << n) - 1) & ~std::uint64_t{1})) == 2);
    }
    CHECK_THROWS_AS(count_distinct_sets(Graph(22), QubitSet::full(22)), std::invalid_argument);
    CHECK(count_distinct_sets(Graph(22), QubitSet::full(22), 22) == 1);
}

TEST_CASE("distinct sets listing and multiplicity") {
    const auto g = graph13();
    const auto sets = distinct_sets(g, labels(6, {3, 4, 6}));
    REQUIRE(sets.size() == 4);
    for (const auto& s : sets) CHECK(s.multiplicity == 2);
    CHECK(sets.front().first_outcome.bits == GF2Vector(3));
}

TEST_CASE("measurement folds in any order reach the same tableau") {
    Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_graph(9, 0.4, rng);
        const auto a = random_subset(9, rng);
        const auto z = OutcomeBitstring::from_mask(a, rng());
        const auto reference = measured_tableau(g, a, z);
        auto members = a.members();
        std::shuffle(members.begin(), members.end(), rng);
        auto t = graph_generators(g);
        const auto sorted = a.members();
        for (auto q : members) {
            const auto i = static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), q) - sorted.begin());
            t = measure_z(t, q, z.bits.get(i) ? Outcome::minus : Outcome::plus);
        }
        CHECK(t == reference);
        CHECK(t.all_commute());
        CHECK(t.restricted(a.complement()) == traced_generator_set(g, a, z));
    }
}

TEST_CASE("support map is linear") {
    Rng rng(8);
    std::uniform_int_distribution<std::size_t> size(2, 10);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = size(rng);
        const auto g = random_graph(n, 0.5, rng);
        const auto a = random_subset_of_size(n, std::min<std::size_t>(n, 1 + trial % 6), rng);
        const std::uint64_t outcomes = std::uint64_t{1} << a.size();
        for (std::uint64_t x = 0; x < outcomes; ++x) {
            for (std::uint64_t y = 0; y < outcomes; ++y) {
                const auto ux = unitary_support(g, a, OutcomeBitstring::from_mask(a, x));
                const auto uy = unitary_support(g, a, OutcomeBitstring::from_mask(a, y));
                REQUIRE(unitary_support(g, a, OutcomeBitstring::from_mask(a, x ^ y)) == (ux ^ uy));
            }
        }
    }
}

TEST_CASE("k-consistency and multiplicity law on random cases") {
    Rng rng(2024);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = size(rng);
        const auto g = random_graph(n, 0.45, rng);
        const auto a = random_subset(n, rng);
        const auto k = count_distinct_sets(g, a);
        REQUIRE(k == count_distinct_sets_fast(g, a));
        CHECK(std::has_single_bit(k));
        CHECK(((std::uint64_t{1} << a.size()) % k) == 0);
        if (a.size() <= 8) {
            for (const auto& s : distinct_sets(g, a)) CHECK(s.multiplicity * k == (std::uint64_t{1} << a.size()));
        }
    }
}
