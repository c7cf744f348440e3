#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stabce/gf2.hpp"
#include "stabce/graph.hpp"

namespace stabce {

/// Z-measurement outcome; `plus` is eigenvalue +1 (bit 0), `minus` is -1 (bit 1).
enum class Outcome { plus, minus };

/// sign * prod_i X_i^{x_i} Z_i^{z_i}.
struct PauliGenerator {
    bool negative = false;
    GF2Vector x;
    GF2Vector z;

    std::size_t qubits() const noexcept { return x.size(); }
    /// Symplectic inner product is zero.
    bool commutes_with(const PauliGenerator& other) const;
    /// Rendered like "-Z_2 X_3" with 1-indexed qubits; "I" for the identity.
    std::string to_string() const;

    friend bool operator==(const PauliGenerator&, const PauliGenerator&) = default;
};

/// Generators kept in qubit order: entry i is the generator owned by qubit owners()[i].
class StabilizerTableau {
public:
    StabilizerTableau() = default;
    StabilizerTableau(std::size_t n, std::vector<std::size_t> owners, std::vector<PauliGenerator> generators);

    std::size_t qubits() const noexcept { return n_; }
    std::size_t size() const noexcept { return generators_.size(); }
    const std::vector<std::size_t>& owners() const noexcept { return owners_; }
    const std::vector<PauliGenerator>& generators() const noexcept { return generators_; }

    /// Generator owned by qubit q; throws std::out_of_range if q owns none.
    const PauliGenerator& generator_for(std::size_t q) const;
    /// Bit i set iff generator i carries a minus sign.
    GF2Vector sign_vector() const;

    bool all_commute() const;
    /// Stacked (x|z) rows have full rank.
    bool independent() const;

    /// The tableau restricted to generators owned by members of `keep`.
    StabilizerTableau restricted(const QubitSet& keep) const;

    std::string to_string() const;

    friend bool operator==(const StabilizerTableau&, const StabilizerTableau&) = default;

private:
    friend StabilizerTableau measure_z(const StabilizerTableau&, std::size_t, Outcome);

    std::size_t n_ = 0;
    std::vector<std::size_t> owners_;
    std::vector<PauliGenerator> generators_;
};

/// Trace-out outcome: bit i of `bits` is the outcome of the i-th member of `support`.
struct OutcomeBitstring {
    QubitSet support;
    GF2Vector bits;

    OutcomeBitstring() = default;
    OutcomeBitstring(QubitSet support_set, GF2Vector outcome_bits);
    static OutcomeBitstring from_mask(const QubitSet& support, std::uint64_t mask);
};

/// Largest |A| for which the 2^|A| outcome enumeration is allowed.
inline constexpr std::size_t kEnumerationThreshold = 20;

/// S_a = X_a prod_{b in n(a)} Z_b, all signs positive.
StabilizerTableau graph_generators(const Graph& g);

/// Generator for `a` becomes +-Z_a; every other generator containing Z_a is
/// multiplied by +-Z_a. Throws std::logic_error if `a` was already measured.
StabilizerTableau measure_z(const StabilizerTableau& t, std::size_t a, Outcome outcome);

/// Z-support of U(z) on B = complement(A), as a vector over B in ascending order.
GF2Vector unitary_support(const Graph& g, const QubitSet& traced, const OutcomeBitstring& z);

/// Generators of G - A on B, signs flipped where unitary_support is set.
StabilizerTableau traced_generator_set(const Graph& g, const QubitSet& traced, const OutcomeBitstring& z);

/// Fold of measure_z over `traced` in ascending order (includes the +-Z_a generators).
StabilizerTableau measured_tableau(const Graph& g, const QubitSet& traced, const OutcomeBitstring& z);

/// Number of distinct generator sets over all 2^|A| outcomes, by enumeration.
/// Throws std::invalid_argument when |A| > threshold.
std::uint64_t count_distinct_sets(const Graph& g, const QubitSet& traced,
                                  std::size_t threshold = kEnumerationThreshold);

/// 2^rank(Gamma[A, B]).
std::uint64_t count_distinct_sets_fast(const Graph& g, const QubitSet& traced);

/// One representative outcome per distinct set, ordered by the first (smallest)
/// outcome bitstring that produces it, with the set's multiplicity.
struct DistinctSet {
    OutcomeBitstring first_outcome;
    StabilizerTableau generators;
    std::uint64_t multiplicity = 0;
};
std::vector<DistinctSet> distinct_sets(const Graph& g, const QubitSet& traced,
                                       std::size_t threshold = kEnumerationThreshold);

}  // namespace stabce
