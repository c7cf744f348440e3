#include "stabce/random_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stabce {

Graph random_graph(std::size_t n, double edge_probability, Rng& rng) {
    std::bernoulli_distribution coin(edge_probability);
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(std::size_t n, double extra_edge_probability, Rng& rng) {
    if (n == 0) throw std::invalid_argument("random_connected_graph: n must be at least 1");
    const auto order = random_permutation(n, rng);
    std::bernoulli_distribution coin(extra_edge_probability);
    Graph g(n);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> parent(0, i - 1);
        g.add_edge(order[i], order[parent(rng)]);
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v) && coin(rng)) g.add_edge(u, v);
    return g;
}

QubitSet random_subset(std::size_t n, Rng& rng) {
    std::bernoulli_distribution coin(0.5);
    std::uint64_t mask = 0;
    for (std::size_t q = 0; q < n; ++q)
        if (coin(rng)) mask |= std::uint64_t{1} << q;
    return QubitSet(n, mask);
}

QubitSet random_subset_of_size(std::size_t n, std::size_t k, Rng& rng) {
    if (k > n) throw std::invalid_argument("random_subset_of_size: k exceeds n");
    auto perm = random_permutation(n, rng);
    perm.resize(k);
    return QubitSet::from_indices(n, perm);
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace stabce
