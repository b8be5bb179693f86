#include "doctest.h"

#include <random>
#include <set>
#include <sstream>

#include "qforest/complex.hpp"
#include "qforest/io.hpp"

using namespace qforest;

namespace {

// Independent face counter: list every subset of every facet into a set.
std::vector<long long> naive_f_vector(const SimplicialComplex& c) {
    std::set<std::vector<Vertex>> faces;
    for (const Face& facet : c.facets()) {
        const auto& vs = facet.vertices();
        for (unsigned mask = 1; mask < (1u << vs.size()); ++mask) {
            std::vector<Vertex> face;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (mask >> i & 1) face.push_back(vs[i]);
            faces.insert(face);
        }
    }
    std::size_t dim = 0;
    for (const auto& f : faces) dim = std::max(dim, f.size());
    std::vector<long long> counts(dim, 0);
    for (const auto& f : faces) ++counts[f.size() - 1];
    return counts;
}

SimplicialComplex random_complex(std::mt19937& rng) {
    std::uniform_int_distribution<int> facet_count(1, 5);
    std::uniform_int_distribution<int> card(1, 6);
    std::uniform_int_distribution<int> label(1, 9);
    std::vector<Face> faces;
    const int k = facet_count(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<Vertex> verts;
        const int c = card(rng);
        for (int j = 0; j < c; ++j) verts.push_back(label(rng));
        faces.emplace_back(std::move(verts));
    }
    return from_facets(std::move(faces));
}

} // namespace

TEST_CASE("from_facets prunes non-maximal faces") {
    const SimplicialComplex c = from_facets({Face{1, 2}, Face{2}, Face{2, 3}});
    CHECK(c.facets() == std::vector<Face>{Face{1, 2}, Face{2, 3}});

    CHECK(from_facets({Face{1, 2, 3}}).facets() == std::vector<Face>{Face{1, 2, 3}});

    const SimplicialComplex d = from_facets({Face{3, 4, 5}, Face{1, 2, 5}, Face{5}});
    CHECK(d.facets() == std::vector<Face>{Face{1, 2, 5}, Face{3, 4, 5}});
}

TEST_CASE("from_facets rejects bad input") {
    CHECK_THROWS_AS(from_facets({}), EmptyInputError);
    CHECK_THROWS_AS(from_facets({Face(std::vector<Vertex>{0, 1})}), BadVertexError);
    CHECK_THROWS_AS(Face{-3}, BadVertexError);
}

TEST_CASE("from_facets is idempotent") {
    const SimplicialComplex c = from_facets({Face{1, 2}, Face{2, 3}, Face{4}});
    CHECK(from_facets(c.facets()) == c);
}

TEST_CASE("f_vector of a single simplex is a binomial row") {
    const SimplicialComplex c = from_facets({Face{1, 2, 3, 4}});
    CHECK(f_vector(c).entries == std::vector<long long>{4, 6, 4, 1});
}

TEST_CASE("f_vector on the worked fixtures") {
    CHECK(f_vector(from_facets({Face{2, 3, 4}, Face{1, 4}})).entries ==
          std::vector<long long>{4, 4, 1});
    CHECK(f_vector(from_facets({Face{3, 4, 5}, Face{1, 2, 5}})).entries ==
          std::vector<long long>{5, 6, 2});
}

TEST_CASE("f_vector matches the naive subset oracle") {
    std::mt19937 rng(20250809);
    for (int trial = 0; trial < 300; ++trial) {
        const SimplicialComplex c = random_complex(rng);
        CHECK(f_vector(c).entries == naive_f_vector(c));
    }
}

TEST_CASE("f_0 counts the distinct vertices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const SimplicialComplex c = random_complex(rng);
        CHECK(f_vector(c)[0] == c.vertex_count());
    }
}

TEST_CASE("f_vector guards giant facets") {
    std::vector<Vertex> big(26);
    for (int i = 0; i < 26; ++i) big[static_cast<std::size_t>(i)] = i + 1;
    const SimplicialComplex c = from_facets({Face(big)});
    CHECK_THROWS_AS(f_vector(c), ResourceLimitError);
}

TEST_CASE("h_vector on the worked fixtures") {
    CHECK(h_vector(FVector({3, 2})).entries == std::vector<long long>{1, 1, 0});
    CHECK(h_vector(FVector({5, 6, 2})).entries == std::vector<long long>{1, 2, -1, 0});
    // single 4-simplex
    CHECK(h_vector(FVector({5, 10, 10, 5, 1})).entries ==
          std::vector<long long>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("h_0 = 1 and h_1 = n - d for extracted f-vectors") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const SimplicialComplex c = random_complex(rng);
        const FVector f = f_vector(c);
        const HVector h = h_vector(f);
        CHECK(h[0] == 1);
        CHECK(h[1] == c.vertex_count() - (c.dimension() + 1));
    }
}

TEST_CASE("dimension and purity") {
    const SimplicialComplex pure = from_facets({Face{3, 4, 5}, Face{1, 2, 5}});
    CHECK(pure.dimension() == 2);
    CHECK(pure.is_pure());

    const SimplicialComplex mixed = from_facets({Face{2, 3, 4}, Face{1, 4}});
    CHECK(mixed.dimension() == 2);
    CHECK_FALSE(mixed.is_pure());

    const SimplicialComplex point = from_facets({Face{1}});
    CHECK(point.dimension() == 0);
    CHECK(point.is_pure());
}

TEST_CASE("FVector rejects non-positive entries") {
    CHECK_THROWS_AS(FVector({3, 0}), InvalidInputError);
    CHECK_THROWS_AS(FVector({-1}), InvalidInputError);
    CHECK_THROWS_AS(FVector({}), InvalidInputError);
}

TEST_CASE("complex text round trip") {
    std::istringstream in("# sample\n3 4 5\n\n1 2 5\n5\n");
    const SimplicialComplex c = read_complex(in);
    CHECK(c.facets() == std::vector<Face>{Face{1, 2, 5}, Face{3, 4, 5}});

    std::ostringstream out;
    write_complex(out, c);
    CHECK(out.str() == "1 2 5\n3 4 5\n");

    std::istringstream back(out.str());
    CHECK(read_complex(back) == c);
}

TEST_CASE("complex text rejects garbage") {
    std::istringstream bad("1 x 3\n");
    CHECK_THROWS_AS(read_complex(bad), ParseError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_complex(empty), EmptyInputError);
    std::istringstream zero("0 1\n");
    CHECK_THROWS_AS(read_complex(zero), BadVertexError);
}
