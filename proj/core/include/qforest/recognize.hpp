#pragma once

#include <optional>
#include <vector>

#include "qforest/complex.hpp"

namespace qforest {

/// One attachment step of a verified leaf order: `facet` is a leaf of the
/// prefix ending at it, `branch` the chosen branch, delta = |facet| and
/// e = |facet meet branch|.
struct LeafStep {
    Face facet;
    Face branch;
    int delta = 0;
    int e = 0;
};

struct LeafOrderCheck {
    bool valid = false;
    /// 1-based position of the first facet that is not a leaf of its prefix.
    std::optional<int> failing_prefix;
    /// One step per facet after the first, in order.
    std::vector<LeafStep> steps;
};

struct RecognitionReport {
    bool is_quasi_forest = false;
    /// Present iff is_quasi_forest: an ordering F_1, ..., F_s such that each
    /// F_j with j > 1 is a leaf of <F_1, ..., F_j>.
    std::optional<std::vector<Face>> leaf_order;
    std::optional<bool> is_forest;
    /// Present iff is_forest == false: the smallest facet subset (by size,
    /// then lexicographic) generating a subcomplex without a leaf.
    std::optional<std::vector<Face>> witness;
};

/// A branch of facet f: some facet G != f with H meet f contained in
/// G meet f for every other facet H. Containment is read non-strictly.
/// Returns the first such G in canonical facet order, or nothing when f is
/// not a leaf (in particular for single-facet complexes).
/// Throws NotAFacetError when f is not a facet of c.
std::optional<Face> branch_of(const SimplicialComplex& c, const Face& f);

/// Searches for a leaf order by greedy peeling with backtracking. Complexes
/// with more than 20 facets are rejected with ResourceLimitError. A
/// single-facet complex counts as a quasi-forest with the trivial order.
RecognitionReport leaf_order(const SimplicialComplex& c);

/// Checks that every subset of at least two facets generates a subcomplex
/// with a leaf (singletons pass by convention). Fills in the leaf-order
/// fields as well. Same 20-facet guard as leaf_order.
RecognitionReport is_forest(const SimplicialComplex& c);

/// Verifies a caller-supplied ordering facet by facet and extracts the
/// (delta, e) data of each step. Throws NotAPermutationError when ordering
/// is not a permutation of c's facets.
LeafOrderCheck verify_leaf_order(const SimplicialComplex& c,
                                 const std::vector<Face>& ordering);

} // namespace qforest
