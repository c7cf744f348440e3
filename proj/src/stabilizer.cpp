#include "stabce/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace stabce {

bool PauliGenerator::commutes_with(const PauliGenerator& other) const {
    return x.dot(other.z) == z.dot(other.x);
}

std::string PauliGenerator::to_string() const {
    std::string out;
    for (std::size_t q = 0; q < x.size(); ++q) {
        const bool has_x = x.get(q);
        const bool has_z = z.get(q);
        if (!has_x && !has_z) continue;
        if (!out.empty()) out += ' ';
        out += has_x && has_z ? 'Y' : (has_x ? 'X' : 'Z');
        out += '_' + std::to_string(q + 1);
    }
    if (out.empty()) out = "I";
    return negative ? "-" + out : out;
}

StabilizerTableau::StabilizerTableau(std::size_t n, std::vector<std::size_t> owners,
                                     std::vector<PauliGenerator> generators)
    : n_(n), owners_(std::move(owners)), generators_(std::move(generators)) {
    if (owners_.size() != generators_.size()) {
        throw std::invalid_argument("StabilizerTableau: one owner per generator required");
    }
    for (std::size_t i = 0; i < owners_.size(); ++i) {
        if (owners_[i] >= n_ || (i > 0 && owners_[i] <= owners_[i - 1])) {
            throw std::invalid_argument("StabilizerTableau: owners must be ascending qubit indices");
        }
        if (generators_[i].x.size() != n_ || generators_[i].z.size() != n_) {
            throw std::invalid_argument("StabilizerTableau: generator length mismatch");
        }
    }
}

const PauliGenerator& StabilizerTableau::generator_for(std::size_t q) const {
    auto it = std::lower_bound(owners_.begin(), owners_.end(), q);
    if (it == owners_.end() || *it != q) {
        throw std::out_of_range("no generator owned by qubit " + std::to_string(q + 1));
    }
    return generators_[static_cast<std::size_t>(it - owners_.begin())];
}

GF2Vector StabilizerTableau::sign_vector() const {
    GF2Vector s(generators_.size());
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].negative) s.set(i);
    return s;
}

bool StabilizerTableau::all_commute() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (!generators_[i].commutes_with(generators_[j])) return false;
    return true;
}

bool StabilizerTableau::independent() const {
    GF2Matrix stacked(generators_.size(), 2 * n_);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        for (std::size_t q = 0; q < n_; ++q) {
            if (generators_[i].x.get(q)) stacked.set(i, q);
            if (generators_[i].z.get(q)) stacked.set(i, n_ + q);
        }
    }
    return rank(stacked) == generators_.size();
}

StabilizerTableau StabilizerTableau::restricted(const QubitSet& keep) const {
    std::vector<std::size_t> owners;
    std::vector<PauliGenerator> gens;
    for (std::size_t i = 0; i < owners_.size(); ++i) {
        if (keep.contains(owners_[i])) {
            owners.push_back(owners_[i]);
            gens.push_back(generators_[i]);
        }
    }
    return StabilizerTableau(n_, std::move(owners), std::move(gens));
}

std::string StabilizerTableau::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        out += "S_" + std::to_string(owners_[i] + 1) + " = " + generators_[i].to_string() + "\n";
    }
    return out;
}

OutcomeBitstring::OutcomeBitstring(QubitSet support_set, GF2Vector outcome_bits)
    : support(std::move(support_set)), bits(std::move(outcome_bits)) {
    if (bits.size() != support.size()) {
        throw std::invalid_argument("OutcomeBitstring: " + std::to_string(bits.size()) + " bits for a support of " +
                                    std::to_string(support.size()) + " qubits");
    }
}

OutcomeBitstring OutcomeBitstring::from_mask(const QubitSet& support, std::uint64_t mask) {
    return OutcomeBitstring(support, GF2Vector::from_mask(mask, support.size()));
}

StabilizerTableau graph_generators(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> owners(n);
    std::vector<PauliGenerator> gens;
    gens.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        owners[a] = a;
        PauliGenerator p{false, GF2Vector(n), GF2Vector(n)};
        p.x.set(a);
        for (auto b : g.neighborhood(a).members()) p.z.set(b);
        gens.push_back(std::move(p));
    }
    return StabilizerTableau(n, std::move(owners), std::move(gens));
}

StabilizerTableau measure_z(const StabilizerTableau& t, std::size_t a, Outcome outcome) {
    if (a >= t.qubits()) throw std::out_of_range("measure_z: qubit " + std::to_string(a + 1) + " out of range");

    StabilizerTableau out = t;
    auto it = std::lower_bound(out.owners_.begin(), out.owners_.end(), a);
    if (it == out.owners_.end() || *it != a) {
        throw std::logic_error("measure_z: qubit " + std::to_string(a + 1) + " owns no generator");
    }
    const auto own = static_cast<std::size_t>(it - out.owners_.begin());
    if (!out.generators_[own].x.get(a)) {
        throw std::logic_error("measure_z: qubit " + std::to_string(a + 1) + " already measured");
    }

    const bool minus = outcome == Outcome::minus;
    for (std::size_t i = 0; i < out.generators_.size(); ++i) {
        if (i == own) continue;
        auto& gen = out.generators_[i];
        if (gen.x.get(a)) {
            throw std::logic_error("measure_z: generator " + std::to_string(out.owners_[i] + 1) +
                                   " also carries X on the measured qubit");
        }
        if (gen.z.get(a)) {
            gen.z.flip(a);
            gen.negative ^= minus;
        }
    }
    PauliGenerator replacement{minus, GF2Vector(t.qubits()), GF2Vector(t.qubits())};
    replacement.z.set(a);
    out.generators_[own] = std::move(replacement);
    return out;
}

namespace {

void check_outcome(const Graph& g, const QubitSet& traced, const OutcomeBitstring& z) {
    if (traced.universe() != g.size()) {
        throw std::invalid_argument("traced set universe does not match the graph");
    }
    if (!(z.support == traced)) {
        throw std::invalid_argument("outcome support {" + z.support.to_label_string() +
                                    "} does not match traced set {" + traced.to_label_string() + "}");
    }
}

}  // namespace

GF2Vector unitary_support(const Graph& g, const QubitSet& traced, const OutcomeBitstring& z) {
    check_outcome(g, traced, z);
    return mat_vec(g.biadjacency(traced.complement(), traced), z.bits);
}

StabilizerTableau traced_generator_set(const Graph& g, const QubitSet& traced, const OutcomeBitstring& z) {
    const auto support = unitary_support(g, traced, z);
    const auto kept = traced.complement();
    const auto members = kept.members();
    const std::uint64_t kept_mask = kept.mask();

    std::vector<PauliGenerator> gens;
    gens.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto b = members[i];
        PauliGenerator p{support.get(i), GF2Vector(g.size()), GF2Vector(g.size())};
        p.x.set(b);
        for (std::uint64_t m = g.neighbor_mask(b) & kept_mask; m != 0; m &= m - 1)
            p.z.set(static_cast<std::size_t>(std::countr_zero(m)));
        gens.push_back(std::move(p));
    }
    return StabilizerTableau(g.size(), members, std::move(gens));
}

StabilizerTableau measured_tableau(const Graph& g, const QubitSet& traced, const OutcomeBitstring& z) {
    check_outcome(g, traced, z);
    auto t = graph_generators(g);
    const auto members = traced.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        t = measure_z(t, members[i], z.bits.get(i) ? Outcome::minus : Outcome::plus);
    }
    return t;
}

namespace {

// Sign pattern on B for outcome mask z, built from neighbour masks directly.
std::uint64_t sign_pattern(const std::vector<std::uint64_t>& traced_rows, std::uint64_t z) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; z != 0; ++i, z >>= 1)
        if (z & 1U) s ^= traced_rows[i];
    return s;
}

std::vector<std::uint64_t> traced_rows(const Graph& g, const QubitSet& traced) {
    const std::uint64_t kept = traced.complement().mask();
    std::vector<std::uint64_t> rows;
    for (auto a : traced.members()) rows.push_back(g.neighbor_mask(a) & kept);
    return rows;
}

void check_threshold(const QubitSet& traced, std::size_t threshold) {
    if (traced.size() > threshold) {
        throw std::invalid_argument("enumeration over 2^" + std::to_string(traced.size()) +
                                    " outcomes exceeds the threshold of 2^" + std::to_string(threshold) +
                                    "; use count_distinct_sets_fast");
    }
}

}  // namespace

std::uint64_t count_distinct_sets(const Graph& g, const QubitSet& traced, std::size_t threshold) {
    if (traced.universe() != g.size()) throw std::invalid_argument("traced set universe does not match the graph");
    check_threshold(traced, threshold);
    const auto rows = traced_rows(g, traced);
    const std::uint64_t outcomes = std::uint64_t{1} << rows.size();
    std::vector<std::uint64_t> seen;
    seen.reserve(outcomes);
    for (std::uint64_t z = 0; z < outcomes; ++z) seen.push_back(sign_pattern(rows, z));
    std::sort(seen.begin(), seen.end());
    return static_cast<std::uint64_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

std::uint64_t count_distinct_sets_fast(const Graph& g, const QubitSet& traced) {
    if (traced.universe() != g.size()) throw std::invalid_argument("traced set universe does not match the graph");
    return std::uint64_t{1} << rank(g.biadjacency(traced, traced.complement()));
}

std::vector<DistinctSet> distinct_sets(const Graph& g, const QubitSet& traced, std::size_t threshold) {
    if (traced.universe() != g.size()) throw std::invalid_argument("traced set universe does not match the graph");
    check_threshold(traced, threshold);
    const auto rows = traced_rows(g, traced);
    const std::uint64_t outcomes = std::uint64_t{1} << rows.size();

    std::vector<DistinctSet> out;
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::uint64_t z = 0; z < outcomes; ++z) {
        const auto pattern = sign_pattern(rows, z);
        auto [it, inserted] = index.try_emplace(pattern, out.size());
        if (inserted) {
            auto outcome = OutcomeBitstring::from_mask(traced, z);
            out.push_back(DistinctSet{outcome, traced_generator_set(g, traced, outcome), 0});
        }
        ++out[it->second].multiplicity;
    }
    return out;
}

}  // namespace stabce
