#include "stabce/metrics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "stabce/gf2.hpp"
#include "stabce/stabilizer.hpp"

namespace stabce {

namespace {

std::size_t rank_across(const Graph& g, const QubitSet& kept) {
    if (kept.universe() != g.size()) {
        throw std::invalid_argument("qubit set ranges over " + std::to_string(kept.universe()) +
                                    " qubits, graph has " + std::to_string(g.size()));
    }
    const QubitSet other = kept.complement();
    const QubitSet& smaller = kept.size() <= other.size() ? kept : other;
    return static_cast<std::size_t>(std::countr_zero(count_distinct_sets_fast(g, smaller)));
}

// Power-set sum over `subset`, no symmetry assumed.
DyadicRational direct_sum(const Graph& g, const QubitSet& subset) {
    const auto members = subset.members();
    if (members.size() >= 40) {
        throw std::invalid_argument("concentratable entanglement: subset of " + std::to_string(members.size()) +
                                    " qubits is too large to enumerate");
    }
    DyadicRational total;
    const std::uint64_t count = std::uint64_t{1} << members.size();
    for (std::uint64_t pick = 0; pick < count; ++pick) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < members.size(); ++i)
            if ((pick >> i) & 1U) mask |= std::uint64_t{1} << members[i];
        total += purity(g, QubitSet(g.size(), mask));
    }
    return total;
}

void check_subset(const Graph& g, const QubitSet& subset) {
    if (subset.universe() != g.size()) {
        throw std::invalid_argument("subset ranges over " + std::to_string(subset.universe()) + " qubits, graph has " +
                                    std::to_string(g.size()));
    }
    if (subset.empty()) {
        throw std::invalid_argument("concentratable entanglement needs a non-empty qubit subset");
    }
}

// Visit every m-subset of {0..n-1} as a bit mask (Gosper's hack).
template <class Fn>
void for_each_subset_of_size(std::size_t n, std::size_t m, Fn&& fn) {
    if (m == 0) {
        fn(std::uint64_t{0});
        return;
    }
    if (m > n) return;
    const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
    std::uint64_t s = (std::uint64_t{1} << m) - 1;
    while (true) {
        fn(s);
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t r = s + c;
        if (r == 0) break;
        s = (((r ^ s) >> 2) / c) | r;
        if (limit != 0 && s >= limit) break;
    }
}

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return static_cast<std::uint64_t>(c);
}

DyadicRational purity(const Graph& g, const QubitSet& kept) {
    return DyadicRational::inverse_power_of_two(static_cast<unsigned>(rank_across(g, kept)));
}

std::size_t schmidt_rank(const Graph& g, const QubitSet& kept) { return rank_across(g, kept); }

PuritySpectrum purity_spectrum(const Graph& g) {
    const std::size_t n = g.size();
    if (n >= 40) throw std::invalid_argument("purity spectrum: graph too large to enumerate bipartitions");
    PuritySpectrum spec;
    spec.n = n;
    spec.rank_counts.resize(n / 2 + 1);
    for (std::size_t m = 0; m <= n / 2; ++m) {
        auto& counts = spec.rank_counts[m];
        counts.assign(m + 1, 0);
        const bool middle = n == 2 * m && m > 0;
        for_each_subset_of_size(n, m, [&](std::uint64_t mask) {
            if (middle && (mask & 1U) == 0) return;
            ++counts[schmidt_rank(g, QubitSet(n, mask))];
        });
    }
    return spec;
}

std::uint64_t PuritySpectrum::level_size(std::size_t m) const {
    std::uint64_t total = 0;
    for (auto c : rank_counts.at(m)) total += c;
    return total;
}

std::vector<std::pair<DyadicRational, std::uint64_t>> PuritySpectrum::tally(std::size_t m) const {
    std::vector<std::pair<DyadicRational, std::uint64_t>> out;
    const auto& counts = rank_counts.at(m);
    for (std::size_t r = 0; r < counts.size(); ++r) {
        if (counts[r] != 0) out.emplace_back(DyadicRational::inverse_power_of_two(static_cast<unsigned>(r)), counts[r]);
    }
    return out;
}

DyadicRational PuritySpectrum::power_set_sum() const {
    // Each recorded bipartition stands for a subset and its complement.
    DyadicRational total;
    for (const auto& counts : rank_counts)
        for (std::size_t r = 0; r < counts.size(); ++r)
            if (counts[r] != 0) total += DyadicRational::inverse_power_of_two(static_cast<unsigned>(r)).times(2 * counts[r]);
    return total;
}

std::size_t PuritySpectrum::distinct_purities() const {
    std::vector<bool> seen;
    for (const auto& counts : rank_counts) {
        if (seen.size() < counts.size()) seen.resize(counts.size(), false);
        for (std::size_t r = 0; r < counts.size(); ++r)
            if (counts[r] != 0) seen[r] = true;
    }
    return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

DyadicRational concentratable_entanglement_direct(const Graph& g, const QubitSet& subset) {
    check_subset(g, subset);
    return DyadicRational::one() - direct_sum(g, subset).halved(static_cast<unsigned>(subset.size()));
}

DyadicRational concentratable_entanglement(const Graph& g, const QubitSet& subset) {
    check_subset(g, subset);
    if (subset.size() != g.size()) return concentratable_entanglement_direct(g, subset);
    return DyadicRational::one() - purity_spectrum(g).power_set_sum().halved(static_cast<unsigned>(g.size()));
}

RankIndex rank_index(const PuritySpectrum& spectrum, std::size_t m) {
    if (m < 1 || m > spectrum.n / 2) {
        throw std::out_of_range("rank index level " + std::to_string(m) + " outside 1.." +
                                std::to_string(spectrum.n / 2));
    }
    RankIndex ri;
    ri.m = m;
    const auto& counts = spectrum.rank_counts[m];
    for (std::size_t r = m; r >= 1; --r) ri.counts.push_back(counts[r]);
    return ri;
}

RankIndex rank_index(const Graph& g, std::size_t m) {
    if (m < 1 || m > g.size() / 2) {
        throw std::out_of_range("rank index level " + std::to_string(m) + " outside 1.." + std::to_string(g.size() / 2));
    }
    return rank_index(purity_spectrum(g), m);
}

CEBounds ce_bounds(std::size_t n) {
    if (n == 0) throw std::invalid_argument("ce_bounds: n must be at least 1");
    if (n > 64) throw std::invalid_argument("ce_bounds: n must be at most 64");
    const auto nu = static_cast<unsigned>(n);
    CEBounds b;
    b.min = DyadicRational(1, 1) - DyadicRational::inverse_power_of_two(nu);
    DyadicRational sum;
    for (std::size_t j = 0; j <= n; ++j) {
        sum += DyadicRational::inverse_power_of_two(static_cast<unsigned>(std::min(j, n - j))).times(binomial(n, j));
    }
    b.max = DyadicRational::one() - sum.halved(nu);
    return b;
}

DyadicRational snowflake_subset_ce(std::size_t n) {
    if (n == 0) throw std::invalid_argument("snowflake_subset_ce: n must be at least 1");
    if (n > 63) throw std::invalid_argument("snowflake_subset_ce: n must be at most 63");
    unsigned __int128 three = 1;
    for (std::size_t i = 0; i < n; ++i) three *= 3;
    return DyadicRational::one() - DyadicRational(three, static_cast<unsigned>(2 * n));
}

bool maximally_entangled_everywhere(const PuritySpectrum& spectrum) {
    for (std::size_t m = 0; m < spectrum.rank_counts.size(); ++m) {
        const auto& counts = spectrum.rank_counts[m];
        for (std::size_t r = 0; r < m; ++r)
            if (counts[r] != 0) return false;
    }
    return true;
}

CEReport ce_report(const Graph& g, const QubitSet& subset, std::string graph_id) {
    check_subset(g, subset);
    CEReport rep;
    rep.graph_id = std::move(graph_id);
    rep.subset = subset;
    rep.connected = g.is_connected();
    rep.bounds = ce_bounds(subset.size());
    if (subset.size() == g.size()) {
        rep.spectrum = purity_spectrum(g);
        rep.ce = DyadicRational::one() - rep.spectrum.power_set_sum().halved(static_cast<unsigned>(g.size()));
        rep.achieves_min = rep.ce == rep.bounds.min;
        rep.achieves_max = rep.ce == rep.bounds.max;
    } else {
        rep.ce = concentratable_entanglement_direct(g, subset);
    }
    return rep;
}

}  // namespace stabce
