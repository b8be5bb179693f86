#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include "qforest/errors.hpp"

namespace qforest {

/// Vertex labels are positive integers. They need not be contiguous: a
/// complex on the vertex set {3, 7, 9} is fine and has vertex_count() == 3.
using Vertex = int;

/// A face: a finite set of vertices, stored strictly increasing.
/// The empty face is permitted (it is the face counted by f_{-1} = 1);
/// an empty *facet list* is not, see from_facets().
class Face {
public:
    Face() = default;
    explicit Face(std::vector<Vertex> verts);
    Face(std::initializer_list<Vertex> verts);

    const std::vector<Vertex>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }

    bool contains(Vertex v) const;
    bool subset_of(const Face& other) const;

    friend Face intersect(const Face& a, const Face& b);

    bool operator==(const Face&) const = default;
    auto operator<=>(const Face&) const = default; // lexicographic

private:
    std::vector<Vertex> verts_; // sorted ascending, no duplicates, all >= 1
};

/// f-vector (f_0, ..., f_{d-1}): f_i counts faces of cardinality i + 1.
/// All entries are positive; f_{-1} = 1 is implicit and never stored.
struct FVector {
    std::vector<long long> entries;

    explicit FVector(std::vector<long long> e);

    /// Number of entries; the complex it came from has dimension d() - 1.
    int d() const { return static_cast<int>(entries.size()); }
    long long operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }

    bool operator==(const FVector&) const = default;
};

/// h-vector (h_0, ..., h_d), entries may be negative.
struct HVector {
    std::vector<long long> entries;

    int d() const { return static_cast<int>(entries.size()) - 1; }
    long long operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }

    bool operator==(const HVector&) const = default;
};

/// A simplicial complex given by its facets (the inclusion-maximal faces).
/// Facets are pairwise incomparable and kept in a canonical (lexicographic)
/// order, so two complexes are equal iff their facet lists are equal.
/// Instances are immutable once built; build them with from_facets().
class SimplicialComplex {
public:
    const std::vector<Face>& facets() const { return facets_; }

    /// Distinct vertices appearing in some facet, sorted ascending.
    const std::vector<Vertex>& vertices() const { return vertices_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    /// Largest facet cardinality minus one.
    int dimension() const;

    /// True iff all facets have the same cardinality.
    bool is_pure() const;

    bool has_facet(const Face& f) const;

    bool operator==(const SimplicialComplex&) const = default;

    friend SimplicialComplex from_facets(std::vector<Face> raw_faces);

private:
    SimplicialComplex() = default;
    std::vector<Face> facets_;
    std::vector<Vertex> vertices_;
};

/// Builds the complex generated by raw_faces: inclusion-maximal members
/// survive, duplicates and dominated faces are pruned, facets are sorted
/// canonically. Throws EmptyInputError when raw_faces is empty (the minimal
/// complex is a single vertex) and BadVertexError on labels < 1.
SimplicialComplex from_facets(std::vector<Face> raw_faces);

/// Counts all faces of the complex by cardinality. Every subset of every
/// facet is enumerated once (global dedup); facets above 25 vertices are
/// rejected with ResourceLimitError to keep the face count below 2^25.
FVector f_vector(const SimplicialComplex& c);

/// The h-vector determined by
///   sum_{i=0}^{d} f_{i-1} (x - 1)^{d-i} = sum_{i=0}^{d} h_i x^{d-i}
/// with f_{-1} = 1. Exact integer expansion; throws OverflowError when the
/// coefficients leave the 64-bit range.
HVector h_vector(const FVector& f);

} // namespace qforest
