#include "stabce/dense_oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stabce::dense {

namespace {

using Index = std::size_t;

void guard(const Graph& g, std::size_t limit, const char* what) {
    if (g.size() > limit) {
        throw std::invalid_argument(std::string(what) + ": graph on " + std::to_string(g.size()) +
                                    " qubits exceeds the dense limit of " + std::to_string(limit));
    }
}

// Basis-index mask with the bits of every member of `set`.
Index index_mask(std::size_t n, std::uint64_t qubit_mask) {
    Index m = 0;
    for (std::size_t q = 0; q < n; ++q)
        if ((qubit_mask >> q) & 1U) m |= Index{1} << qubit_bit(n, q);
    return m;
}

// Gathers the bits of `idx` at the basis positions of `qubits` (ascending qubit
// order, first qubit most significant).
Index gather(Index idx, std::size_t n, const std::vector<std::size_t>& qubits) {
    Index out = 0;
    for (auto q : qubits) out = (out << 1) | ((idx >> qubit_bit(n, q)) & 1U);
    return out;
}

StateVector z_string_on_graph(const Graph& g, const QubitSet& traced, const OutcomeBitstring& z) {
    const auto kept = traced.complement();
    const auto support = unitary_support(g, traced, z);
    const Graph pruned = g.induced(kept);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support.get(i)) mask |= std::uint64_t{1} << i;
    return apply_z_string(QubitSet(pruned.size(), mask), build_state(pruned));
}

// Generator on the full register mapped onto the qubits of `kept` (relabelled ascending).
PauliGenerator compress(const PauliGenerator& p, const QubitSet& kept) {
    const auto members = kept.members();
    PauliGenerator out{p.negative, GF2Vector(members.size()), GF2Vector(members.size())};
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (p.x.get(members[i])) out.x.set(i);
        if (p.z.get(members[i])) out.z.set(i);
    }
    return out;
}

bool same_vector(const StateVector& a, const StateVector& b, double tol) {
    return a.n == b.n && (a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

StateVector build_state(const Graph& g) {
    guard(g, kMaxStateQubits, "build_state");
    const std::size_t n = g.size();
    const Index dim = Index{1} << n;
    StateVector psi{n, Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(dim), std::pow(2.0, -0.5 * static_cast<double>(n)))};
    for (auto [u, v] : g.edges()) {
        const Index both = (Index{1} << qubit_bit(n, u)) | (Index{1} << qubit_bit(n, v));
        for (Index i = 0; i < dim; ++i)
            if ((i & both) == both) psi.amplitudes[static_cast<Eigen::Index>(i)] *= -1.0;
    }
    return psi;
}

Eigen::MatrixXcd reduced_density_matrix(const StateVector& psi, const QubitSet& kept) {
    if (kept.universe() != psi.n) throw std::invalid_argument("reduced_density_matrix: qubit set universe mismatch");
    const auto keep = kept.members();
    const auto trace = kept.complement().members();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index{1} << keep.size(), Eigen::Index{1} << trace.size());
    const Index dim = Index{1} << psi.n;
    for (Index i = 0; i < dim; ++i) {
        m(static_cast<Eigen::Index>(gather(i, psi.n, keep)), static_cast<Eigen::Index>(gather(i, psi.n, trace))) =
            psi.amplitudes[static_cast<Eigen::Index>(i)];
    }
    return m * m.adjoint();
}

double dense_purity(const StateVector& psi, const QubitSet& kept) {
    return reduced_density_matrix(psi, kept).squaredNorm();
}

StateVector apply_pauli(const PauliGenerator& p, const StateVector& psi) {
    if (p.qubits() != psi.n) throw std::invalid_argument("apply_pauli: generator length mismatch");
    std::uint64_t xq = 0;
    std::uint64_t zq = 0;
    for (std::size_t q = 0; q < psi.n; ++q) {
        if (p.x.get(q)) xq |= std::uint64_t{1} << q;
        if (p.z.get(q)) zq |= std::uint64_t{1} << q;
    }
    const Index xm = index_mask(psi.n, xq);
    const Index zm = index_mask(psi.n, zq);
    StateVector out{psi.n, Eigen::VectorXcd(psi.amplitudes.size())};
    const Index dim = Index{1} << psi.n;
    for (Index i = 0; i < dim; ++i) {
        double factor = (std::popcount(i & zm) & 1) ? -1.0 : 1.0;
        if (p.negative) factor = -factor;
        out.amplitudes[static_cast<Eigen::Index>(i ^ xm)] = factor * psi.amplitudes[static_cast<Eigen::Index>(i)];
    }
    return out;
}

StateVector apply_z_string(const QubitSet& support, const StateVector& psi) {
    if (support.universe() != psi.n) throw std::invalid_argument("apply_z_string: qubit set universe mismatch");
    const Index zm = index_mask(psi.n, support.mask());
    StateVector out = psi;
    const Index dim = Index{1} << psi.n;
    for (Index i = 0; i < dim; ++i)
        if (std::popcount(i & zm) & 1) out.amplitudes[static_cast<Eigen::Index>(i)] *= -1.0;
    return out;
}

StateVector project_out(const StateVector& psi, std::size_t a, Outcome outcome) {
    if (a >= psi.n) throw std::out_of_range("project_out: qubit out of range");
    const std::size_t n = psi.n;
    const std::size_t pos = qubit_bit(n, a);
    const Index low = (Index{1} << pos) - 1;
    const Index value = outcome == Outcome::minus ? Index{1} << pos : 0;
    StateVector out{n - 1, Eigen::VectorXcd(Eigen::Index{1} << (n - 1))};
    for (Index j = 0; j < (Index{1} << (n - 1)); ++j) {
        const Index full = ((j & ~low) << 1) | value | (j & low);
        out.amplitudes[static_cast<Eigen::Index>(j)] = psi.amplitudes[static_cast<Eigen::Index>(full)];
    }
    const double norm = out.amplitudes.norm();
    if (norm < kStateTolerance) throw std::domain_error("project_out: outcome has zero probability");
    out.amplitudes /= norm;
    return out;
}

StateVector project_out(const StateVector& psi, const OutcomeBitstring& z) {
    if (z.support.universe() != psi.n) throw std::invalid_argument("project_out: support universe mismatch");
    const auto members = z.support.members();
    StateVector out = psi;
    // Highest qubit first so lower indices keep their positions.
    for (std::size_t i = members.size(); i-- > 0;) {
        out = project_out(out, members[i], z.bits.get(i) ? Outcome::minus : Outcome::plus);
    }
    return out;
}

double overlap(const StateVector& a, const StateVector& b) {
    if (a.n != b.n) throw std::invalid_argument("overlap: qubit count mismatch");
    return std::abs(a.amplitudes.dot(b.amplitudes));
}

bool stabilizes(const StabilizerTableau& t, const StateVector& psi) {
    const auto& gens = t.generators();
    for (const auto& p : gens)
        if (!same_vector(apply_pauli(p, psi), psi, kStateTolerance)) return false;
    if (psi.n <= 6 && gens.size() <= 6) {
        for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << gens.size()); ++pick) {
            StateVector v = psi;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if ((pick >> i) & 1U) v = apply_pauli(gens[i], v);
            if (!same_vector(v, psi, kStateTolerance)) return false;
        }
    }
    return true;
}

bool check_stabilizer(const Graph& g) {
    guard(g, kMaxStateQubits, "check_stabilizer");
    return stabilizes(graph_generators(g), build_state(g));
}

bool check_measurement_rule(const Graph& g, std::size_t a, Outcome outcome) {
    guard(g, kMaxCheckQubits, "check_measurement_rule");
    if (a >= g.size()) throw std::out_of_range("check_measurement_rule: qubit out of range");
    const auto projected = project_out(build_state(g), a, outcome);

    const QubitSet traced = QubitSet::from_indices(g.size(), {a});
    const auto z = OutcomeBitstring::from_mask(traced, outcome == Outcome::minus ? 1 : 0);
    const auto expected = z_string_on_graph(g, traced, z);
    if (std::abs(overlap(projected, expected) - 1.0) > kCompareTolerance) return false;

    const auto tableau = measure_z(graph_generators(g), a, outcome);
    const auto kept = traced.complement();
    const auto remaining = tableau.restricted(kept);
    for (const auto& p : remaining.generators()) {
        if (!same_vector(apply_pauli(compress(p, kept), projected), projected, kCompareTolerance)) return false;
    }
    return true;
}

bool check_lemma(const Graph& g, const QubitSet& traced) {
    guard(g, kMaxCheckQubits, "check_lemma");
    if (traced.size() > kMaxLemmaTraced) {
        throw std::invalid_argument("check_lemma: traced set larger than " + std::to_string(kMaxLemmaTraced));
    }
    const auto psi = build_state(g);
    const std::uint64_t outcomes = std::uint64_t{1} << traced.size();
    std::vector<GF2Vector> support;
    std::vector<StateVector> via_unitary;
    std::vector<StateVector> via_projection;
    for (std::uint64_t m = 0; m < outcomes; ++m) {
        const auto z = OutcomeBitstring::from_mask(traced, m);
        support.push_back(unitary_support(g, traced, z));
        via_unitary.push_back(z_string_on_graph(g, traced, z));
        via_projection.push_back(project_out(psi, z));
        if (std::abs(overlap(via_unitary.back(), via_projection.back()) - 1.0) > kCompareTolerance) return false;
    }
    for (std::uint64_t i = 0; i < outcomes; ++i) {
        for (std::uint64_t j = i; j < outcomes; ++j) {
            const double u = overlap(via_unitary[i], via_unitary[j]);
            const double p = overlap(via_projection[i], via_projection[j]);
            if (support[i] == support[j]) {
                if (std::abs(u - 1.0) > kCompareTolerance || std::abs(p - 1.0) > kCompareTolerance) return false;
            } else if (u >= kCompareTolerance || p >= kCompareTolerance) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> projected_state_multiplicities(const Graph& g, const QubitSet& traced) {
    guard(g, kMaxCheckQubits, "projected_state_multiplicities");
    if (traced.size() > kMaxLemmaTraced) {
        throw std::invalid_argument("projected_state_multiplicities: traced set too large");
    }
    const auto psi = build_state(g);
    std::vector<StateVector> reps;
    std::vector<std::size_t> counts;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << traced.size()); ++m) {
        const auto state = project_out(psi, OutcomeBitstring::from_mask(traced, m));
        bool matched = false;
        for (std::size_t r = 0; r < reps.size() && !matched; ++r) {
            if (std::abs(overlap(reps[r], state) - 1.0) <= kCompareTolerance) {
                ++counts[r];
                matched = true;
            }
        }
        if (!matched) {
            reps.push_back(state);
            counts.push_back(1);
        }
    }
    return counts;
}

double reconstruction_error(const Graph& g, const QubitSet& traced) {
    guard(g, kMaxCheckQubits, "reconstruction_error");
    const auto kept = traced.complement();
    const Eigen::MatrixXcd rho = reduced_density_matrix(build_state(g), kept);

    const auto sets = distinct_sets(g, traced, kMaxLemmaTraced);
    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (const auto& s : sets) {
        const auto state = z_string_on_graph(g, traced, s.first_outcome);
        mix += state.amplitudes * state.amplitudes.adjoint();
    }
    mix /= static_cast<double>(sets.size());
    return (rho - mix).cwiseAbs().maxCoeff();
}

}  // namespace stabce::dense
