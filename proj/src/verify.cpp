#include "stabce/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stabce/dense_oracle.hpp"
#include "stabce/metrics.hpp"
#include "stabce/random_graphs.hpp"
#include "stabce/stabilizer.hpp"

namespace stabce {

namespace {

std::string describe(const Graph& g, const QubitSet& set) {
    return "graph6 " + write_graph6(g) + " set {" + set.to_label_string() + "}";
}

void record(VerifyCheck& check, bool ok, const std::string& what) {
    ++check.cases;
    if (!ok && check.failures++ == 0) check.first_failure = what;
}

}  // namespace

std::vector<VerifyCheck> run_verification(const VerifyOptions& options) {
    Rng rng(options.seed);
    std::uniform_int_distribution<std::size_t> size_dist(2, std::max<std::size_t>(2, options.max_qubits));
    std::uniform_real_distribution<double> density(0.0, 0.6);

    VerifyCheck stabilizer{"stabilizer eigenstate", 0, 0, {}};
    VerifyCheck measurement{"measurement rule", 0, 0, {}};
    VerifyCheck lemma{"lemma (linearity and orthogonality)", 0, 0, {}};
    VerifyCheck multiplicity{"distinct-state multiplicity", 0, 0, {}};
    VerifyCheck oracle{"purity vs dense oracle", 0, 0, {}};
    VerifyCheck kcount{"distinct-set count vs 2^rank", 0, 0, {}};

    for (std::size_t i = 0; i < options.purity_cases; ++i) {
        const Graph g = random_connected_graph(size_dist(rng), density(rng), rng);
        const QubitSet b = random_subset(g.size(), rng);
        const double dense = dense::dense_purity(dense::build_state(g), b);
        const double exact = purity(g, b).to_double();
        std::ostringstream msg;
        msg << describe(g, b) << ": dense " << dense << " vs " << exact;
        record(oracle, std::abs(dense - exact) <= dense::kCompareTolerance, msg.str());
        record(stabilizer, dense::check_stabilizer(g), describe(g, b));

        const QubitSet a = b.size() <= 12 ? b : b.complement();
        record(kcount, count_distinct_sets(g, a) == count_distinct_sets_fast(g, a), describe(g, a));
    }

    for (std::size_t i = 0; i < options.measurement_cases; ++i) {
        const Graph g = random_connected_graph(size_dist(rng), density(rng), rng);
        std::uniform_int_distribution<std::size_t> qubit(0, g.size() - 1);
        const std::size_t a = qubit(rng);
        const Outcome outcome = std::bernoulli_distribution(0.5)(rng) ? Outcome::minus : Outcome::plus;
        record(measurement, dense::check_measurement_rule(g, a, outcome),
               describe(g, QubitSet::from_indices(g.size(), {a})) +
                   (outcome == Outcome::minus ? " outcome -1" : " outcome +1"));
    }

    for (std::size_t i = 0; i < options.lemma_cases; ++i) {
        const Graph g = random_connected_graph(size_dist(rng), density(rng), rng);
        std::uniform_int_distribution<std::size_t> traced_size(1, std::min<std::size_t>(6, g.size()));
        const QubitSet a = random_subset_of_size(g.size(), traced_size(rng), rng);
        record(lemma, dense::check_lemma(g, a), describe(g, a));

        const auto counts = dense::projected_state_multiplicities(g, a);
        const auto k = count_distinct_sets(g, a);
        bool uniform = counts.size() == k;
        for (auto c : counts) uniform = uniform && c * k == (std::size_t{1} << a.size());
        record(multiplicity, uniform, describe(g, a));
    }

    return {stabilizer, measurement, lemma, multiplicity, oracle, kcount};
}

}  // namespace stabce
