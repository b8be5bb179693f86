#pragma once

#include <utility>
#include <vector>

#include "qforest/complex.hpp"

namespace qforest {

/// Simple undirected graph on vertices 1..n (contiguous, unlike complex
/// vertex labels, so isolated vertices survive round trips).
class Graph {
public:
    /// Validates range, rejects self-loops, deduplicates edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    /// Sorted list of edges (u, v) with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_; // row-major bitmatrix, words_ per row
    std::size_t words_ = 1;
};

struct ChordalityReport {
    bool chordal = false;
    /// Perfect elimination ordering (eliminate front first); set iff chordal.
    std::vector<int> elimination_order;
    /// A chordless cycle of length >= 4; set iff not chordal.
    std::vector<int> chordless_cycle;
};

struct StrongChordalityReport {
    bool strongly_chordal = false;
    /// When false: an even cycle of length >= 6 without an odd chord, or for
    /// non-chordal inputs the chordless cycle itself.
    std::vector<int> violating_cycle;
};

/// Maximum-cardinality search plus elimination-order verification. On
/// failure the report carries an explicit chordless cycle.
ChordalityReport is_chordal(const Graph& g);

/// Definitional test: the graph is chordal and every even cycle of length
/// >= 6 has a chord joining two cycle vertices at odd distance > 1 along the
/// cycle. Full cycle enumeration; graphs above 12 vertices are rejected with
/// ResourceLimitError. The witness is the lexicographically least violating
/// cycle in canonical form (smallest vertex first, smaller neighbor second).
StrongChordalityReport is_strongly_chordal(const Graph& g);

/// The complex whose facets are the maximal cliques of g (Bron-Kerbosch with
/// pivoting). Isolated vertices become singleton facets. Guarded at 25
/// vertices.
SimplicialComplex clique_complex(const Graph& g);

} // namespace qforest
