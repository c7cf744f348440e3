#include "stabce/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

namespace stabce {

namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6Max = 126;

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::uint64_t universe_mask(std::size_t universe) {
    return universe == 64 ? ~std::uint64_t{0} : bit(universe) - 1;
}

void check_universe(std::size_t universe) {
    if (universe > kMaxVertices) {
        throw std::invalid_argument("qubit count " + std::to_string(universe) + " exceeds the supported maximum of " +
                                    std::to_string(kMaxVertices));
    }
}

}  // namespace

// ---------------------------------------------------------------- QubitSet

QubitSet::QubitSet(std::size_t universe, std::uint64_t mask) : universe_(universe), mask_(mask) {
    check_universe(universe);
    if ((mask & ~universe_mask(universe)) != 0) {
        throw std::out_of_range("QubitSet: member outside universe of size " + std::to_string(universe));
    }
}

QubitSet QubitSet::from_indices(std::size_t universe, std::initializer_list<std::size_t> indices) {
    return from_indices(universe, std::vector<std::size_t>(indices));
}

QubitSet QubitSet::from_indices(std::size_t universe, const std::vector<std::size_t>& indices) {
    check_universe(universe);
    std::uint64_t mask = 0;
    for (auto q : indices) {
        if (q >= universe) {
            throw std::out_of_range("QubitSet: index " + std::to_string(q) + " outside universe of size " +
                                    std::to_string(universe));
        }
        mask |= bit(q);
    }
    return QubitSet(universe, mask);
}

QubitSet QubitSet::from_labels(std::size_t universe, const std::vector<std::size_t>& labels) {
    check_universe(universe);
    std::uint64_t mask = 0;
    for (auto label : labels) {
        if (label == 0 || label > universe) {
            throw std::out_of_range("qubit label " + std::to_string(label) + " is outside 1.." +
                                    std::to_string(universe));
        }
        mask |= bit(label - 1);
    }
    return QubitSet(universe, mask);
}

QubitSet QubitSet::parse_labels(std::size_t universe, std::string_view text) {
    std::vector<std::size_t> labels;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (!token.empty()) {
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw std::invalid_argument("qubit label '" + std::string(token) + "' is not a positive integer");
            }
            labels.push_back(value);
        }
        pos = comma + 1;
    }
    return from_labels(universe, labels);
}

QubitSet QubitSet::full(std::size_t universe) {
    check_universe(universe);
    return QubitSet(universe, universe_mask(universe));
}

std::size_t QubitSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> QubitSet::members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

std::vector<std::size_t> QubitSet::labels() const {
    auto out = members();
    for (auto& q : out) ++q;
    return out;
}

std::string QubitSet::to_label_string() const {
    std::string s;
    for (auto label : labels()) {
        if (!s.empty()) s += ',';
        s += std::to_string(label);
    }
    return s;
}

QubitSet QubitSet::complement() const { return QubitSet(universe_, ~mask_ & universe_mask(universe_)); }

// ---------------------------------------------------------------- families

Family parse_family(std::string_view name) {
    if (name == "linear") return Family::linear;
    if (name == "ring") return Family::ring;
    if (name == "star") return Family::star;
    if (name == "complete") return Family::complete;
    if (name == "snowflake") return Family::snowflake;
    throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family kind) {
    switch (kind) {
        case Family::linear: return "linear";
        case Family::ring: return "ring";
        case Family::star: return "star";
        case Family::complete: return "complete";
        case Family::snowflake: return "snowflake";
    }
    return "unknown";
}

// ---------------------------------------------------------------- Graph

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::invalid_argument("graph6: " + what + " at byte offset " + std::to_string(offset)), offset_(offset) {}

Graph::Graph(std::size_t n) : n_(n), adj_(n, 0) { check_universe(n); }

void Graph::check_vertex(std::size_t v) const {
    if (v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(n_) +
                                " vertices");
    }
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string>* warnings) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        }
        if (g.adjacent(u, v)) {
            if (warnings) {
                warnings->push_back("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ") collapsed");
            }
            continue;
        }
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::family(Family kind, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument(std::string(family_name(kind)) + " family needs at least one vertex");
    }
    switch (kind) {
        case Family::linear: {
            Graph g(n);
            for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case Family::ring: {
            if (n < 3) throw std::invalid_argument("ring family needs at least 3 vertices");
            Graph g = family(Family::linear, n);
            g.add_edge(n - 1, 0);
            return g;
        }
        case Family::star: {
            Graph g(n);
            for (std::size_t i = 1; i < n; ++i) g.add_edge(0, i);
            return g;
        }
        case Family::complete: {
            Graph g(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
            return g;
        }
        case Family::snowflake: {
            if (2 * n > kMaxVertices) throw std::invalid_argument("snowflake core too large");
            Graph g(2 * n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
                g.add_edge(i, i + n);
            }
            return g;
        }
    }
    throw std::invalid_argument("unknown family");
}

std::size_t Graph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (auto row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
    return twice / 2;
}

std::vector<Graph::Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return ((adj_[u] >> v) & 1U) != 0;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

std::uint64_t Graph::neighbor_mask(std::size_t a) const {
    check_vertex(a);
    return adj_[a];
}

std::size_t Graph::degree(std::size_t a) const { return static_cast<std::size_t>(std::popcount(neighbor_mask(a))); }

QubitSet Graph::neighborhood(std::size_t a) const { return QubitSet(n_, neighbor_mask(a)); }

GF2Matrix Graph::biadjacency(const QubitSet& rows, const QubitSet& cols) const {
    if (rows.universe() != n_ || cols.universe() != n_) {
        throw std::invalid_argument("biadjacency: qubit sets must range over the graph's vertices");
    }
    if (!rows.disjoint(cols)) {
        throw std::invalid_argument("biadjacency: row and column sets overlap");
    }
    const auto r = rows.members();
    const auto c = cols.members();
    GF2Matrix m(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if ((adj_[r[i]] >> c[j]) & 1U) m.set(i, j);
    return m;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == universe_mask(n_);
}

Graph Graph::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != n_) throw std::invalid_argument("permuted: permutation has the wrong length");
    std::vector<bool> hit(n_, false);
    for (auto p : perm) {
        if (p >= n_ || hit[p]) throw std::invalid_argument("permuted: not a permutation");
        hit[p] = true;
    }
    Graph g(n_);
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
}

Graph Graph::induced(const QubitSet& keep) const {
    if (keep.universe() != n_) throw std::invalid_argument("induced: qubit set universe mismatch");
    const auto members = keep.members();
    Graph g(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if ((adj_[members[i]] >> members[j]) & 1U) g.add_edge(i, j);
    return g;
}

// ---------------------------------------------------------------- graph6

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.size() >= 10 && text.substr(0, 10) == ">>graph6<<") {
        text.remove_prefix(10);
    }
    if (text.empty()) throw Graph6Error("empty input", 0);

    auto value_at = [&](std::size_t i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < kGraph6Offset || c > kGraph6Max) {
            throw Graph6Error("character code " + std::to_string(c) + " outside printable range 63..126", i);
        }
        return c - kGraph6Offset;
    };

    std::size_t n = 0;
    std::size_t pos = 0;
    const int first = value_at(0);
    if (first < 63) {
        n = static_cast<std::size_t>(first);
        pos = 1;
    } else {
        if (text.size() < 4) throw Graph6Error("truncated extended length field", text.size());
        if (static_cast<unsigned char>(text[1]) == kGraph6Max) {
            throw Graph6Error("8-byte length form is not supported", 1);
        }
        n = (static_cast<std::size_t>(value_at(1)) << 12) | (static_cast<std::size_t>(value_at(2)) << 6) |
            static_cast<std::size_t>(value_at(3));
        if (n < 63) throw Graph6Error("malformed length: extended form used for n < 63", 0);
        pos = 4;
    }
    if (n > kMaxVertices) {
        throw Graph6Error("vertex count " + std::to_string(n) + " exceeds the supported maximum", 0);
    }

    const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - pos != nbytes) {
        throw Graph6Error("expected " + std::to_string(nbytes) + " adjacency bytes for n = " + std::to_string(n) +
                              ", found " + std::to_string(text.size() - pos),
                          std::min(text.size(), pos + nbytes));
    }

    Graph g(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int byte = value_at(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (nbytes > 0) {
        const std::size_t last = pos + nbytes - 1;
        const int padding_bits = static_cast<int>(nbytes * 6 - nbits);
        if ((value_at(last) & ((1 << padding_bits) - 1)) != 0) {
            throw Graph6Error("nonzero padding bits", last);
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const std::size_t n = g.size();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kGraph6Offset));
    } else {
        out.push_back(static_cast<char>(kGraph6Max));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kGraph6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kGraph6Offset));
        out.push_back(static_cast<char>((n & 0x3f) + kGraph6Offset));
    }
    int acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kGraph6Offset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Offset));
    return out;
}

// ---------------------------------------------------------------- edge list

Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_n = false;
    std::size_t n = 0;
    std::vector<Graph::Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        long long a = 0;
        if (!(fields >> a)) {
            std::string rest;
            fields.clear();
            if (fields >> rest) throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected integers");
            continue;
        }
        if (!have_n) {
            if (a < 0) throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": negative vertex count");
            n = static_cast<std::size_t>(a);
            have_n = true;
            std::string extra;
            if (fields >> extra) throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": first line must hold only n");
            continue;
        }
        long long b = 0;
        std::string extra;
        if (!(fields >> b) || (fields >> extra)) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected 'u v'");
        }
        if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n) {
            throw std::out_of_range("edge list line " + std::to_string(line_no) + ": vertex label outside 1.." +
                                    std::to_string(n));
        }
        edges.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
    }
    if (!have_n) throw std::invalid_argument("edge list: missing vertex count");
    return Graph::from_edges(n, edges, warnings);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

// ---------------------------------------------------------------- canonical form

namespace {

// Colour refinement from degrees; colours are ranks of sorted signatures, so
// the final colouring is an isomorphism invariant.
std::vector<std::size_t> refine_colours(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> colour(n);
    for (std::size_t v = 0; v < n; ++v) colour[v] = g.degree(v);

    std::size_t classes = 0;
    while (true) {
        std::vector<std::vector<std::size_t>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<std::size_t> nb;
            for (std::uint64_t m = g.neighbor_mask(v); m != 0; m &= m - 1)
                nb.push_back(colour[static_cast<std::size_t>(std::countr_zero(m))]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t v = 0; v < n; ++v) {
            colour[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        }
        if (sorted.size() == classes) break;
        classes = sorted.size();
    }
    return colour;
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::uint64_t> cell_of_position;  // vertex mask allowed at each position
    std::vector<std::size_t> order;
    std::vector<std::uint64_t> code;
    std::vector<std::size_t> best_order;
    std::vector<std::uint64_t> best_code;
    bool have_best = false;

    void search(std::size_t pos, std::uint64_t used) {
        const std::size_t n = g.size();
        if (pos == n) {
            if (!have_best || code < best_code) {
                best_order = order;
                best_code = code;
                have_best = true;
            }
            return;
        }
        for (std::uint64_t cand = cell_of_position[pos] & ~used; cand != 0; cand &= cand - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(cand));
            const std::uint64_t nb = g.neighbor_mask(v);
            std::uint64_t column = 0;
            for (std::size_t i = 0; i < pos; ++i) column = (column << 1) | ((nb >> order[i]) & 1U);

            // Prune once the prefix can no longer beat the best code.
            if (have_best && column > best_code[pos] &&
                std::equal(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(pos), best_code.begin())) {
                continue;
            }
            order[pos] = v;
            code[pos] = column;
            search(pos + 1, used | bit(v));
        }
    }
};

}  // namespace

Graph canonical_graph(const Graph& g, std::size_t bound) {
    const std::size_t n = g.size();
    if (n > bound) {
        throw std::invalid_argument("canonical form: graph on " + std::to_string(n) +
                                    " vertices exceeds the configured bound of " + std::to_string(bound));
    }
    if (n == 0) return g;

    const auto colour = refine_colours(g);
    std::vector<std::size_t> by_colour(n);
    std::iota(by_colour.begin(), by_colour.end(), 0);
    std::stable_sort(by_colour.begin(), by_colour.end(),
                     [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });

    CanonSearch s{g, std::vector<std::uint64_t>(n, 0), std::vector<std::size_t>(n, 0),
                  std::vector<std::uint64_t>(n, 0), {}, {}, false};
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t c = colour[by_colour[pos]];
        for (std::size_t v = 0; v < n; ++v)
            if (colour[v] == c) s.cell_of_position[pos] |= bit(v);
    }
    s.search(0, 0);

    std::vector<std::size_t> perm(n);
    for (std::size_t pos = 0; pos < n; ++pos) perm[s.best_order[pos]] = pos;
    return g.permuted(perm);
}

std::string canonical_form(const Graph& g, std::size_t bound) { return write_graph6(canonical_graph(g, bound)); }

}  // namespace stabce
