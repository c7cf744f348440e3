#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "stabce/graph.hpp"
#include "stabce/stabilizer.hpp"

namespace stabce::dense {

/// Largest graph build_state accepts.
inline constexpr std::size_t kMaxStateQubits = 14;
/// Largest graph the measurement and lemma checks accept.
inline constexpr std::size_t kMaxCheckQubits = 12;
/// Largest traced set check_lemma enumerates.
inline constexpr std::size_t kMaxLemmaTraced = 8;

inline constexpr double kStateTolerance = 1e-12;
inline constexpr double kCompareTolerance = 1e-10;

/// 2^n amplitudes; qubit 1 (index 0) is the most significant bit of the basis index.
struct StateVector {
    std::size_t n = 0;
    Eigen::VectorXcd amplitudes;

    double norm() const { return amplitudes.norm(); }
};

/// Basis-index bit that holds qubit q (0-indexed) in an n-qubit register.
constexpr std::size_t qubit_bit(std::size_t n, std::size_t q) { return n - 1 - q; }

/// CZ on every edge applied to |+>^n. Throws std::invalid_argument above kMaxStateQubits.
StateVector build_state(const Graph& g);

/// Explicit rho_B by partial trace over the complement.
Eigen::MatrixXcd reduced_density_matrix(const StateVector& psi, const QubitSet& kept);
double dense_purity(const StateVector& psi, const QubitSet& kept);

/// sign * prod X^x Z^z applied to psi.
StateVector apply_pauli(const PauliGenerator& p, const StateVector& psi);
/// Product over Z_b for b in `support`.
StateVector apply_z_string(const QubitSet& support, const StateVector& psi);

/// Projects qubit a onto the Z eigenstate for `outcome`, renormalises and drops the qubit.
/// Throws std::domain_error when the outcome has zero probability.
StateVector project_out(const StateVector& psi, std::size_t a, Outcome outcome);
/// Projects every member of z.support (ascending) and drops them.
StateVector project_out(const StateVector& psi, const OutcomeBitstring& z);

/// |<a|b>|.
double overlap(const StateVector& a, const StateVector& b);

/// Every generator (and, for n <= 6, every product of generators) fixes psi.
bool stabilizes(const StabilizerTableau& t, const StateVector& psi);
/// stabilizes(graph_generators(g), build_state(g)).
bool check_stabilizer(const Graph& g);

/// Dense projection agrees with U_+- |G - a> and with the measure_z tableau.
bool check_measurement_rule(const Graph& g, std::size_t a, Outcome outcome);

/// Both lemma parts over all outcome pairs on `traced`.
bool check_lemma(const Graph& g, const QubitSet& traced);

/// Multiplicities of the distinct (up to phase) projected states over all 2^|A| outcomes.
std::vector<std::size_t> projected_state_multiplicities(const Graph& g, const QubitSet& traced);

/// Largest elementwise deviation between rho_B and the equal-weight mixture
/// of the distinct generator-set states.
double reconstruction_error(const Graph& g, const QubitSet& traced);

}  // namespace stabce::dense
