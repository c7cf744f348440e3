#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabce/gf2.hpp"

namespace stabce {

/// Largest vertex count a Graph can hold (one machine word per adjacency row).
inline constexpr std::size_t kMaxVertices = 64;

/// Subset of the qubits {0, ..., universe-1}. Stored 0-indexed; the `labels`
/// helpers convert to and from the 1-indexed qubit names used in output.
class QubitSet {
public:
    QubitSet() = default;
    explicit QubitSet(std::size_t universe, std::uint64_t mask = 0);

    static QubitSet from_indices(std::size_t universe, std::initializer_list<std::size_t> indices);
    static QubitSet from_indices(std::size_t universe, const std::vector<std::size_t>& indices);
    /// 1-indexed qubit labels. Throws std::out_of_range naming the offending label.
    static QubitSet from_labels(std::size_t universe, const std::vector<std::size_t>& labels);
    /// Comma separated 1-indexed labels, e.g. "1,2,5". Empty string is the empty set.
    static QubitSet parse_labels(std::size_t universe, std::string_view text);
    static QubitSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::uint64_t mask() const noexcept { return mask_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }
    bool contains(std::size_t q) const noexcept { return q < universe_ && ((mask_ >> q) & 1U) != 0; }

    /// Members in ascending order, 0-indexed.
    std::vector<std::size_t> members() const;
    std::vector<std::size_t> labels() const;
    std::string to_label_string() const;

    QubitSet complement() const;
    bool disjoint(const QubitSet& other) const noexcept { return (mask_ & other.mask_) == 0; }

    friend bool operator==(const QubitSet&, const QubitSet&) = default;

private:
    std::size_t universe_ = 0;
    std::uint64_t mask_ = 0;
};

/// Thrown by the graph6 reader; `offset()` is the byte position of the problem.
class Graph6Error : public std::invalid_argument {
public:
    Graph6Error(const std::string& what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

enum class Family { linear, ring, star, complete, snowflake };

Family parse_family(std::string_view name);
std::string_view family_name(Family kind);

/// Simple undirected graph on vertices 0..n-1 with bit-packed adjacency rows.
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph() = default;
    explicit Graph(std::size_t n);

    /// Duplicate edges are collapsed; each collapsed duplicate adds a message to
    /// `warnings` when one is supplied.
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                            std::vector<std::string>* warnings = nullptr);
    static Graph family(Family kind, std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept;
    std::vector<Edge> edges() const;

    bool adjacent(std::size_t u, std::size_t v) const;
    void add_edge(std::size_t u, std::size_t v);
    std::uint64_t neighbor_mask(std::size_t a) const;
    std::size_t degree(std::size_t a) const;

    QubitSet neighborhood(std::size_t a) const;
    /// |A| x |B| matrix, rows and columns in ascending member order.
    GF2Matrix biadjacency(const QubitSet& rows, const QubitSet& cols) const;
    bool is_connected() const;

    /// Vertex v of this graph becomes vertex perm[v] of the result.
    Graph permuted(const std::vector<std::size_t>& perm) const;
    /// Induced subgraph on `keep`, relabeled to 0..|keep|-1 in ascending order.
    Graph induced(const QubitSet& keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(std::size_t v) const;

    std::size_t n_ = 0;
    std::vector<std::uint64_t> adj_;
};

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// First non-comment line "n", then one 1-indexed "u v" pair per line. '#' starts a comment.
Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string write_edge_list(const Graph& g);

inline constexpr std::size_t kDefaultCanonicalBound = 8;

/// Canonical relabeling: isomorphic graphs map to the identical Graph.
/// Chooses the minimal column-major upper-triangle encoding among vertex
/// orderings that respect the colour-refinement partition.
Graph canonical_graph(const Graph& g, std::size_t bound = kDefaultCanonicalBound);

/// Byte key equal for two graphs iff they are isomorphic (graph6 of the canonical graph).
std::string canonical_form(const Graph& g, std::size_t bound = kDefaultCanonicalBound);

}  // namespace stabce
