#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stabce/dyadic.hpp"
#include "stabce/graph.hpp"

namespace stabce {

/// Schmidt-rank tallies per smaller-side size m = 0..floor(n/2).
/// rank_counts[m][r] counts bipartitions whose smaller side has m qubits and
/// whose reduced purity is 2^-r. When n = 2m each unordered bipartition is
/// counted once (the side containing qubit 1 is used).
struct PuritySpectrum {
    std::size_t n = 0;
    std::vector<std::vector<std::uint64_t>> rank_counts;

    /// Number of bipartitions recorded at level m.
    std::uint64_t level_size(std::size_t m) const;
    /// Purity values at level m as (value, occurrences), largest purity first.
    std::vector<std::pair<DyadicRational, std::uint64_t>> tally(std::size_t m) const;
    /// Sum of Tr rho_alpha^2 over every subset alpha of the full qubit set.
    DyadicRational power_set_sum() const;
    /// Number of distinct purity values over all levels.
    std::size_t distinct_purities() const;

    friend bool operator==(const PuritySpectrum&, const PuritySpectrum&) = default;
};

/// Occurrences of Schmidt rank m, m-1, ..., 1 over the level-m bipartitions.
struct RankIndex {
    std::size_t m = 0;
    std::vector<std::uint64_t> counts;

    friend bool operator==(const RankIndex&, const RankIndex&) = default;
};

struct CEBounds {
    DyadicRational min;
    DyadicRational max;
};

/// Tr rho_B^2 = 1/k with k = 2^rank(Gamma[A', B']) for the smaller side A'.
DyadicRational purity(const Graph& g, const QubitSet& kept);

/// -log2 of the purity.
std::size_t schmidt_rank(const Graph& g, const QubitSet& kept);

/// 1 - 2^-|s| * sum_{alpha subset of s} Tr rho_alpha^2. The full set uses the
/// purity-spectrum shortcut; proper subsets are summed directly.
/// Throws std::invalid_argument for an empty subset.
DyadicRational concentratable_entanglement(const Graph& g, const QubitSet& subset);

/// Direct power-set summation for any non-empty subset (no symmetry shortcut).
DyadicRational concentratable_entanglement_direct(const Graph& g, const QubitSet& subset);

PuritySpectrum purity_spectrum(const Graph& g);

/// Throws std::out_of_range unless 1 <= m <= floor(n/2).
RankIndex rank_index(const Graph& g, std::size_t m);
RankIndex rank_index(const PuritySpectrum& spectrum, std::size_t m);

/// min = 1/2 - 2^-n, max = 1 - 2^-n sum_j C(n,j) 2^-min(j, n-j).
CEBounds ce_bounds(std::size_t n);

/// 1 - (3/4)^n.
DyadicRational snowflake_subset_ce(std::size_t n);

/// True iff every bipartition is maximally entangled (purity 2^-min(|A|,|B|)).
bool maximally_entangled_everywhere(const PuritySpectrum& spectrum);

struct CEReport {
    std::string graph_id;
    QubitSet subset;
    DyadicRational ce;
    PuritySpectrum spectrum;
    CEBounds bounds;
    bool connected = false;
    bool achieves_min = false;
    bool achieves_max = false;
};

/// Bounds and the achieves_* flags refer to the full-set CE over |subset| qubits;
/// the flags are only set when the subset is the full qubit set.
CEReport ce_report(const Graph& g, const QubitSet& subset, std::string graph_id = {});

std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace stabce
