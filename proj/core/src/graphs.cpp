#include "qforest/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>

namespace qforest {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw BadVertexError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.words_ = static_cast<std::size_t>(n) / 64 + 1;
    g.adj_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw BadVertexError("edge endpoint out of range: (" + std::to_string(u) +
                                 ", " + std::to_string(v) + ")");
        if (u == v)
            throw InvalidInputError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    for (auto [u, v] : g.edges_) {
        auto set = [&](int a, int b) {
            g.adj_[static_cast<std::size_t>(a - 1) * g.words_ +
                   static_cast<std::size_t>(b - 1) / 64] |=
                std::uint64_t{1} << ((b - 1) % 64);
        };
        set(u, v);
        set(v, u);
    }
    return g;
}

bool Graph::adjacent(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
    return (adj_[static_cast<std::size_t>(u - 1) * words_ +
                 static_cast<std::size_t>(v - 1) / 64] >>
            ((v - 1) % 64)) &
           1;
}

int Graph::degree(int v) const {
    int deg = 0;
    for (std::size_t w = 0; w < words_; ++w)
        deg += std::popcount(adj_[static_cast<std::size_t>(v - 1) * words_ + w]);
    return deg;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

namespace {

// Maximum-cardinality search: number vertices n down to 1, always taking an
// unnumbered vertex with the most numbered neighbors. Returns the order
// front-first (the elimination order).
std::vector<int> mcs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> numbered(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int pos = n; pos >= 1; --pos) {
        int best = -1;
        for (int v = 1; v <= n; ++v)
            if (!numbered[static_cast<std::size_t>(v)] &&
                (best == -1 || weight[static_cast<std::size_t>(v)] >
                                   weight[static_cast<std::size_t>(best)]))
                best = v;
        numbered[static_cast<std::size_t>(best)] = true;
        order[static_cast<std::size_t>(pos - 1)] = best;
        for (int u = 1; u <= n; ++u)
            if (!numbered[static_cast<std::size_t>(u)] && g.adjacent(best, u))
                ++weight[static_cast<std::size_t>(u)];
    }
    return order;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        const int v = order[static_cast<std::size_t>(i)];
        int parent = -1;
        for (int u = 1; u <= n; ++u)
            if (g.adjacent(v, u) && pos[static_cast<std::size_t>(u)] > i &&
                (parent == -1 ||
                 pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(parent)]))
                parent = u;
        if (parent == -1) continue;
        for (int u = 1; u <= n; ++u)
            if (u != parent && g.adjacent(v, u) && pos[static_cast<std::size_t>(u)] > i &&
                !g.adjacent(parent, u))
                return false;
    }
    return true;
}

// Finds some chordless cycle of length >= 4 in a graph already known to be
// non-chordal. For each vertex v and non-adjacent pair u, w of its
// neighbors, a shortest u-w path avoiding v and the rest of N(v) closes a
// chordless cycle through v.
std::vector<int> find_chordless_cycle(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 1; v <= n; ++v) {
        const std::vector<int> nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                const int u = nb[a], w = nb[b];
                if (g.adjacent(u, w)) continue;
                std::vector<bool> blocked(static_cast<std::size_t>(n) + 1, false);
                blocked[static_cast<std::size_t>(v)] = true;
                for (int x : nb)
                    if (x != u && x != w) blocked[static_cast<std::size_t>(x)] = true;
                std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
                std::deque<int> queue{u};
                parent[static_cast<std::size_t>(u)] = u;
                while (!queue.empty() && parent[static_cast<std::size_t>(w)] == 0) {
                    const int x = queue.front();
                    queue.pop_front();
                    for (int y = 1; y <= n; ++y)
                        if (!blocked[static_cast<std::size_t>(y)] &&
                            parent[static_cast<std::size_t>(y)] == 0 && g.adjacent(x, y)) {
                            parent[static_cast<std::size_t>(y)] = x;
                            queue.push_back(y);
                        }
                }
                if (parent[static_cast<std::size_t>(w)] == 0) continue;
                std::vector<int> cycle{v};
                for (int x = w; x != u; x = parent[static_cast<std::size_t>(x)])
                    cycle.push_back(x);
                cycle.push_back(u);
                std::reverse(cycle.begin() + 1, cycle.end());
                return cycle;
            }
        }
    }
    return {};
}

constexpr int kMaxStronglyChordalVertices = 12;
constexpr int kMaxCliqueVertices = 25;

// True iff the cycle (as a closed vertex sequence) has a chord joining two
// of its vertices at odd distance > 1 along the cycle. Cycle length is even,
// so the two arc lengths have the same parity.
bool has_odd_chord(const Graph& g, const std::vector<int>& cycle) {
    const int len = static_cast<int>(cycle.size());
    for (int i = 0; i < len; ++i)
        for (int j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1) continue; // consecutive around the seam
            if (!g.adjacent(cycle[static_cast<std::size_t>(i)],
                            cycle[static_cast<std::size_t>(j)]))
                continue;
            const int dist = std::min(j - i, len - (j - i));
            if (dist % 2 == 1) return true;
        }
    return false;
}

// Enumerates simple cycles in canonical form (smallest vertex first, smaller
// neighbor in second place) in lexicographic order of the vertex sequence,
// stopping at the first even cycle of length >= 6 without an odd chord.
bool scan_cycles(const Graph& g, int root, std::vector<int>& path,
                 std::vector<bool>& used, std::vector<int>& violation) {
    const int v = path.back();
    if (path.size() >= 3 && g.adjacent(v, root) && path[1] < path.back()) {
        if (path.size() % 2 == 0 && path.size() >= 6 && !has_odd_chord(g, path)) {
            violation = path;
            return true;
        }
    }
    for (int u = root + 1; u <= g.vertex_count(); ++u) {
        if (used[static_cast<std::size_t>(u)] || !g.adjacent(v, u)) continue;
        path.push_back(u);
        used[static_cast<std::size_t>(u)] = true;
        if (scan_cycles(g, root, path, used, violation)) return true;
        used[static_cast<std::size_t>(u)] = false;
        path.pop_back();
    }
    return false;
}

void bron_kerbosch(const Graph& g, std::uint32_t r, std::uint32_t p, std::uint32_t x,
                   std::vector<std::uint32_t>& cliques) {
    if (p == 0 && x == 0) {
        cliques.push_back(r);
        return;
    }
    // Pivot on the vertex of P | X with the most neighbors inside P.
    std::uint32_t px = p | x;
    int pivot = -1, best = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!(px >> v & 1)) continue;
        int cnt = 0;
        for (int u = 0; u < g.vertex_count(); ++u)
            if ((p >> u & 1) && g.adjacent(v + 1, u + 1)) ++cnt;
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!(p >> v & 1) || (pivot >= 0 && g.adjacent(pivot + 1, v + 1))) continue;
        std::uint32_t nv = 0;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (g.adjacent(v + 1, u + 1)) nv |= std::uint32_t{1} << u;
        bron_kerbosch(g, r | (std::uint32_t{1} << v), p & nv, x & nv, cliques);
        p &= ~(std::uint32_t{1} << v);
        x |= std::uint32_t{1} << v;
    }
}

} // namespace

ChordalityReport is_chordal(const Graph& g) {
    ChordalityReport r;
    std::vector<int> order = mcs_order(g);
    if (is_perfect_elimination_order(g, order)) {
        r.chordal = true;
        r.elimination_order = std::move(order);
    } else {
        r.chordless_cycle = find_chordless_cycle(g);
        if (r.chordless_cycle.empty())
            throw Error("internal: elimination check failed but no chordless cycle found");
    }
    return r;
}

StrongChordalityReport is_strongly_chordal(const Graph& g) {
    if (g.vertex_count() > kMaxStronglyChordalVertices)
        throw ResourceLimitError("strong chordality check limited to " +
                                 std::to_string(kMaxStronglyChordalVertices) + " vertices");
    StrongChordalityReport r;
    ChordalityReport chordal = is_chordal(g);
    if (!chordal.chordal) {
        r.violating_cycle = std::move(chordal.chordless_cycle);
        return r;
    }
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()) + 1, false);
    for (int root = 1; root <= g.vertex_count(); ++root) {
        std::vector<int> path{root};
        used[static_cast<std::size_t>(root)] = true;
        if (scan_cycles(g, root, path, used, r.violating_cycle)) return r;
        used[static_cast<std::size_t>(root)] = false;
    }
    r.strongly_chordal = true;
    return r;
}

SimplicialComplex clique_complex(const Graph& g) {
    if (g.vertex_count() > kMaxCliqueVertices)
        throw ResourceLimitError("clique complex limited to " +
                                 std::to_string(kMaxCliqueVertices) + " vertices");
    if (g.vertex_count() == 0)
        throw EmptyInputError("clique complex of the empty graph");

    std::vector<std::uint32_t> cliques;
    const std::uint32_t all = (std::uint32_t{1} << g.vertex_count()) - 1;
    bron_kerbosch(g, 0, all, 0, cliques);

    std::vector<Face> facets;
    facets.reserve(cliques.size());
    for (std::uint32_t mask : cliques) {
        std::vector<Vertex> verts;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (mask >> v & 1) verts.push_back(v + 1);
        facets.emplace_back(std::move(verts));
    }
    return from_facets(std::move(facets));
}

} // namespace qforest
