#include "qforest/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_set>

#include "qforest/detail/checked.hpp"

namespace qforest {

Face::Face(std::vector<Vertex> verts) : verts_(std::move(verts)) {
    for (Vertex v : verts_)
        if (v < 1)
            throw BadVertexError("vertex labels must be >= 1, got " + std::to_string(v));
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
}

Face::Face(std::initializer_list<Vertex> verts) : Face(std::vector<Vertex>(verts)) {}

bool Face::contains(Vertex v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Face::subset_of(const Face& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(),
                         verts_.begin(), verts_.end());
}

Face intersect(const Face& a, const Face& b) {
    Face r;
    std::set_intersection(a.verts_.begin(), a.verts_.end(),
                          b.verts_.begin(), b.verts_.end(),
                          std::back_inserter(r.verts_));
    return r;
}

FVector::FVector(std::vector<long long> e) : entries(std::move(e)) {
    if (entries.empty())
        throw InvalidInputError("f-vector must have at least one entry");
    for (long long x : entries)
        if (x <= 0)
            throw InvalidInputError("f-vector entries must be positive, got " +
                                    std::to_string(x));
}

int SimplicialComplex::dimension() const {
    std::size_t d = 0;
    for (const Face& f : facets_) d = std::max(d, f.size());
    return static_cast<int>(d) - 1;
}

bool SimplicialComplex::is_pure() const {
    for (const Face& f : facets_)
        if (f.size() != facets_.front().size()) return false;
    return true;
}

bool SimplicialComplex::has_facet(const Face& f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
}

SimplicialComplex from_facets(std::vector<Face> raw_faces) {
    if (raw_faces.empty())
        throw EmptyInputError("a complex needs at least one face");

    std::sort(raw_faces.begin(), raw_faces.end());
    raw_faces.erase(std::unique(raw_faces.begin(), raw_faces.end()), raw_faces.end());

    SimplicialComplex c;
    for (std::size_t i = 0; i < raw_faces.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < raw_faces.size() && maximal; ++j)
            if (i != j && raw_faces[i].subset_of(raw_faces[j]))
                maximal = false; // proper containment, duplicates were removed
        if (maximal) c.facets_.push_back(raw_faces[i]);
    }

    // A complex consisting of just the empty face has no vertices; reject it
    // together with the empty input (the minimal complex is one vertex).
    if (c.facets_.size() == 1 && c.facets_.front().empty())
        throw EmptyInputError("a complex needs at least one vertex");

    std::set<Vertex> verts;
    for (const Face& f : c.facets_)
        verts.insert(f.vertices().begin(), f.vertices().end());
    c.vertices_.assign(verts.begin(), verts.end());
    return c;
}

namespace {

constexpr std::size_t kMaxFacetCardinality = 25;

// Dense-index fast path: every face becomes one bitmask over the complex's
// vertex list. Usable whenever the complex has at most 64 distinct vertices.
std::vector<long long> count_faces_masked(const SimplicialComplex& c) {
    const std::vector<Vertex>& verts = c.vertices();
    std::vector<long long> counts(static_cast<std::size_t>(c.dimension()) + 1, 0);
    std::unordered_set<std::uint64_t> seen;
    for (const Face& facet : c.facets()) {
        std::uint64_t facet_mask = 0;
        for (Vertex v : facet.vertices()) {
            std::size_t idx = static_cast<std::size_t>(
                std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
            facet_mask |= std::uint64_t{1} << idx;
        }
        for (std::uint64_t sub = facet_mask;; sub = (sub - 1) & facet_mask) {
            if (sub != 0 && seen.insert(sub).second)
                ++counts[static_cast<std::size_t>(std::popcount(sub)) - 1];
            if (sub == 0) break;
        }
    }
    return counts;
}

void collect_subsets(const std::vector<Vertex>& facet, std::size_t from,
                     std::vector<Vertex>& current, std::set<std::vector<Vertex>>& seen) {
    if (!current.empty()) seen.insert(current);
    for (std::size_t i = from; i < facet.size(); ++i) {
        current.push_back(facet[i]);
        collect_subsets(facet, i + 1, current, seen);
        current.pop_back();
    }
}

std::vector<long long> count_faces_generic(const SimplicialComplex& c) {
    std::set<std::vector<Vertex>> seen;
    std::vector<Vertex> current;
    for (const Face& facet : c.facets())
        collect_subsets(facet.vertices(), 0, current, seen);
    std::vector<long long> counts(static_cast<std::size_t>(c.dimension()) + 1, 0);
    for (const auto& face : seen) ++counts[face.size() - 1];
    return counts;
}

} // namespace

FVector f_vector(const SimplicialComplex& c) {
    for (const Face& f : c.facets())
        if (f.size() > kMaxFacetCardinality)
            throw ResourceLimitError("face enumeration limited to facets of at most " +
                                     std::to_string(kMaxFacetCardinality) + " vertices");
    std::vector<long long> counts = c.vertex_count() <= 64 ? count_faces_masked(c)
                                                           : count_faces_generic(c);
    return FVector(std::move(counts));
}

HVector h_vector(const FVector& f) {
    using detail::checked_add;
    using detail::checked_mul;
    const int d = f.d();

    // Accumulate sum_{i=0}^{d} f_{i-1} (x-1)^{d-i} exactly, low degree first.
    std::vector<long long> poly(static_cast<std::size_t>(d) + 1, 0);
    std::vector<long long> pow{1}; // (x-1)^k, built up from k = 0
    for (int k = 0; k <= d; ++k) {
        const long long coeff = (d - k == 0) ? 1 : f[d - k - 1]; // f_{i-1} with i = d-k
        for (int j = 0; j <= k; ++j)
            poly[static_cast<std::size_t>(j)] =
                checked_add(poly[static_cast<std::size_t>(j)],
                            checked_mul(coeff, pow[static_cast<std::size_t>(j)]));
        if (k < d) {
            std::vector<long long> next(pow.size() + 1, 0);
            for (std::size_t j = 0; j < pow.size(); ++j) {
                next[j + 1] = checked_add(next[j + 1], pow[j]);
                next[j] = detail::checked_sub(next[j], pow[j]);
            }
            pow = std::move(next);
        }
    }

    HVector h;
    h.entries.resize(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        h.entries[static_cast<std::size_t>(i)] = poly[static_cast<std::size_t>(d - i)];
    return h;
}

} // namespace qforest
