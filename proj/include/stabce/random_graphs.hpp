#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "stabce/graph.hpp"

namespace stabce {

using Rng = std::mt19937_64;

/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double edge_probability, Rng& rng);

/// Random labelled spanning tree plus independent extra edges with the given probability.
Graph random_connected_graph(std::size_t n, double extra_edge_probability, Rng& rng);

/// Uniform random subset of {0..n-1}, each qubit included with probability 1/2.
QubitSet random_subset(std::size_t n, Rng& rng);

/// Uniform random subset of exactly k qubits.
QubitSet random_subset_of_size(std::size_t n, std::size_t k, Rng& rng);

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);

}  // namespace stabce
