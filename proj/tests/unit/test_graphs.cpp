#include "doctest.h"

#include <sstream>

#include "qforest/graphs.hpp"
#include "qforest/io.hpp"
#include "qforest/oracle.hpp"

using namespace qforest;

namespace {

Graph four_cycle() { return Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

Graph k4() {
    return Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

// Inner triangle 1,2,3; outer vertices 4, 5, 6 each adjacent to one inner edge.
Graph three_sun() {
    return Graph::from_edges(6, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 4},
                                 {2, 5}, {3, 5}, {3, 6}, {1, 6}});
}

bool cycle_is_chordless(const Graph& g, const std::vector<int>& cycle) {
    const int len = static_cast<int>(cycle.size());
    if (len < 4) return false;
    for (int i = 0; i < len; ++i) {
        // consecutive vertices adjacent
        if (!g.adjacent(cycle[static_cast<std::size_t>(i)],
                        cycle[static_cast<std::size_t>((i + 1) % len)]))
            return false;
        for (int j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1) continue;
            if (g.adjacent(cycle[static_cast<std::size_t>(i)],
                           cycle[static_cast<std::size_t>(j)]))
                return false;
        }
    }
    return true;
}

// Definitional chordality check, independent of the elimination-order route:
// enumerate all simple cycles and look for a chordless one of length >= 4.
bool chordal_by_definition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> path;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    auto rec = [&](auto&& self, int root) -> bool {
        if (path.size() >= 4 && g.adjacent(path.back(), root) &&
            path[1] < path.back() && cycle_is_chordless(g, path))
            return false;
        for (int u = root + 1; u <= n; ++u) {
            if (used[static_cast<std::size_t>(u)] || !g.adjacent(path.back(), u))
                continue;
            path.push_back(u);
            used[static_cast<std::size_t>(u)] = true;
            const bool ok = self(self, root);
            path.pop_back();
            used[static_cast<std::size_t>(u)] = false;
            if (!ok) return false;
        }
        return true;
    };
    for (int root = 1; root <= n; ++root) {
        path.assign(1, root);
        used.assign(static_cast<std::size_t>(n) + 1, false);
        used[static_cast<std::size_t>(root)] = true;
        if (!rec(rec, root)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("graph construction") {
    const Graph g = Graph::from_edges(3, {{1, 2}, {2, 3}, {1, 2}});
    CHECK(g.edges().size() == 2); // duplicate collapsed
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK(g.degree(2) == 2);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), BadVertexError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{2, 2}}), InvalidInputError);
}

TEST_CASE("is_chordal on the worked fixtures") {
    const ChordalityReport bad = is_chordal(four_cycle());
    CHECK_FALSE(bad.chordal);
    CHECK(cycle_is_chordless(four_cycle(), bad.chordless_cycle));

    CHECK(is_chordal(k4()).chordal);
    CHECK(is_chordal(three_sun()).chordal);
}

TEST_CASE("chordal elimination orders are reported when they exist") {
    const ChordalityReport r = is_chordal(three_sun());
    REQUIRE(r.chordal);
    CHECK(r.elimination_order.size() == 6);
}

TEST_CASE("is_chordal agrees with the definitional cycle scan up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        enumerate_graphs(n, [&](const Graph& g) {
            const ChordalityReport r = is_chordal(g);
            CHECK(r.chordal == chordal_by_definition(g));
            if (!r.chordal) CHECK(cycle_is_chordless(g, r.chordless_cycle));
            return true;
        });
}

TEST_CASE("is_strongly_chordal on the worked fixtures") {
    const StrongChordalityReport sun = is_strongly_chordal(three_sun());
    CHECK_FALSE(sun.strongly_chordal);
    CHECK(sun.violating_cycle.size() == 6);

    CHECK(is_strongly_chordal(k4()).strongly_chordal);

    // not chordal at all; the chordless 4-cycle is the witness
    const StrongChordalityReport square = is_strongly_chordal(four_cycle());
    CHECK_FALSE(square.strongly_chordal);
    CHECK(square.violating_cycle.size() == 4);

    Graph big = Graph::from_edges(13, {{1, 2}});
    CHECK_THROWS_AS(is_strongly_chordal(big), ResourceLimitError);
}

TEST_CASE("clique_complex on the worked fixtures") {
    const Graph path = Graph::from_edges(3, {{1, 2}, {2, 3}});
    CHECK(clique_complex(path).facets() == std::vector<Face>{Face{1, 2}, Face{2, 3}});

    CHECK(clique_complex(k4()).facets() == std::vector<Face>{Face{1, 2, 3, 4}});

    CHECK(clique_complex(three_sun()).facets() ==
          std::vector<Face>{Face{1, 2, 3}, Face{1, 2, 4}, Face{1, 3, 6}, Face{2, 3, 5}});

    // isolated vertices become singleton facets
    const Graph sparse = Graph::from_edges(4, {{1, 2}});
    CHECK(clique_complex(sparse).facets() ==
          std::vector<Face>{Face{1, 2}, Face{3}, Face{4}});
}

TEST_CASE("clique_complex agrees with subset enumeration on small graphs") {
    // oracle: a subset is a facet iff it is a clique and no proper superset is
    for (int n = 1; n <= 5; ++n)
        enumerate_graphs(n, [&](const Graph& g) {
            std::vector<Face> expected;
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<Vertex> verts;
                for (int b = 0; b < n; ++b)
                    if (mask >> b & 1) verts.push_back(b + 1);
                bool clique = true;
                for (std::size_t i = 0; i < verts.size() && clique; ++i)
                    for (std::size_t j = i + 1; j < verts.size() && clique; ++j)
                        clique = g.adjacent(verts[i], verts[j]);
                if (!clique) continue;
                bool maximal = true;
                for (int v = 1; v <= n && maximal; ++v) {
                    if (mask >> (v - 1) & 1) continue;
                    bool extends = true;
                    for (Vertex u : verts) extends = extends && g.adjacent(u, v);
                    maximal = !extends;
                }
                if (maximal) expected.emplace_back(std::move(verts));
            }
            std::sort(expected.begin(), expected.end());
            CHECK(clique_complex(g).facets() == expected);
            return true;
        });
}

TEST_CASE("graph text round trip") {
    std::istringstream in("# sample\nn 4\n1 2\n2 4\n");
    const Graph g = read_graph(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 4}});

    std::ostringstream out;
    write_graph(out, g);
    CHECK(out.str() == "n 4\n1 2\n2 4\n");

    std::istringstream bad("n 4\n2 1\n");
    CHECK_THROWS_AS(read_graph(bad), ParseError);
    std::istringstream no_header("1 2\n");
    CHECK_THROWS_AS(read_graph(no_header), ParseError);
}
