#pragma once

#include <optional>
#include <vector>

#include "qforest/complex.hpp"
#include "qforest/transforms.hpp"

namespace qforest {

/// Outcome of the realizability tests for an f-vector. The quasi-forest test
/// asks that every suffix sum sum_{i=k}^{d} c_i (k = 1..d) be positive,
/// equivalently that every b_k be positive; the pure test additionally asks
/// c_i <= 0 for 1 <= i < d, equivalently 0 < b_1 <= ... <= b_d. Both routes
/// are computed and cross-checked on every call.
struct RealizabilityVerdict {
    bool is_quasi_forest_fvector = false;
    bool is_pure_quasi_forest_fvector = false;
    CSequence c;
    BSequence b;
    /// When the quasi-forest test fails: smallest k with sum_{i=k}^d c_i <= 0.
    /// When only the pure test fails: smallest i in [1, d) with c_i > 0.
    std::optional<int> failing_index;
};

/// Facet-size sequence (delta_1 <= ... <= delta_{s+1}) and attachment
/// overlaps (e_1 <= ... <= e_s). deltas.back() is the target top cardinality.
struct DeltaESequences {
    std::vector<int> deltas;
    std::vector<int> es;

    bool operator==(const DeltaESequences&) const = default;
};

struct UnimodalityReport {
    /// True iff 1 <= f_0 <= ... <= f_{p-1} >= f_p >= ... >= f_{d-1} with
    /// p = floor((d+1)/2), the fixed peak the pure-case argument yields.
    bool proof_peak_chain = false;
    int proof_peak_index = 0; ///< p - 1, as an index into f
    /// True iff some pivot exists at all (weakly rises, then weakly falls,
    /// over the extended sequence 1, f_0, ..., f_{d-1}).
    bool unimodal = false;
    /// Index into f of the first maximum; -1 means the leading implicit 1.
    int peak_index = 0;
};

/// Thrown by realize() when the input fails the quasi-forest test.
class NotRealizableError : public Error {
public:
    NotRealizableError(const std::string& what, RealizabilityVerdict v)
        : Error(what), verdict(std::move(v)) {}
    RealizabilityVerdict verdict;
};

RealizabilityVerdict is_quasi_forest_fvector(const FVector& f);
RealizabilityVerdict is_pure_quasi_forest_fvector(const FVector& f);

/// Reads the delta/e multisets off a c-sequence whose suffix sums are all
/// positive: index i enters deltas with multiplicity c_i when c_i > 0 and
/// enters es with multiplicity -c_i when c_i < 0. Throws
/// ConditionViolatedError (with the witness k) otherwise.
DeltaESequences decompose(const CSequence& c);

/// Cancels equal (delta, e) pairs until the two value sets are disjoint.
/// Leaves sum_j (1+x)^{delta_j} - sum_j (1+x)^{e_j} unchanged.
DeltaESequences reduce_collisions(DeltaESequences seq);

/// Builds an explicit forest with facet sizes deltas and consecutive
/// overlaps es on exactly sum(deltas) - sum(es) vertices. The facets F_1,
/// ..., F_{s+1} (in order of increasing minimum vertex) satisfy
/// F_j \cap F_k = F_j \cap F_{j+1} for every k > j.
/// Requires: both sequences sorted ascending, deltas positive, es
/// non-negative, no value shared between them, and e_j < delta_j for each j.
SimplicialComplex construct_forest(const DeltaESequences& seq);

/// Full pipeline: decompose the c-sequence of f and build the witness
/// forest. The result has f_vector(result) == f; it is pure whenever f also
/// passes the pure test. Throws NotRealizableError when f fails the
/// quasi-forest test.
SimplicialComplex realize(const FVector& f);

UnimodalityReport check_unimodal(const FVector& f);

} // namespace qforest
