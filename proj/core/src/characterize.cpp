#include "qforest/characterize.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qforest/detail/checked.hpp"

namespace qforest {

namespace {

// suffix[k] = sum_{i=k}^{d} c_i for k = 0..d.
std::vector<long long> suffix_sums(const CSequence& c) {
    std::vector<long long> s(c.entries.size(), 0);
    long long run = 0;
    for (int k = c.d(); k >= 0; --k) {
        run = detail::checked_add(run, c[k]);
        s[static_cast<std::size_t>(k)] = run;
    }
    return s;
}

RealizabilityVerdict classify(const FVector& f) {
    RealizabilityVerdict v;
    v.c = c_sequence(f);
    v.b = b_sequence(f);
    const int d = f.d();

    const std::vector<long long> suffix = suffix_sums(v.c);
    for (int k = 1; k <= d; ++k)
        if (v.b.at(k) != suffix[static_cast<std::size_t>(k)])
            throw Error("internal: b-sequence disagrees with c suffix sums");

    std::optional<int> plain_fail;
    for (int k = 1; k <= d && !plain_fail; ++k)
        if (suffix[static_cast<std::size_t>(k)] <= 0) plain_fail = k;

    std::optional<int> pure_fail = plain_fail;
    for (int i = 1; i < d && !pure_fail; ++i)
        if (v.c[i] > 0) pure_fail = i;

    // The b-route must reach the same verdicts.
    bool b_plain = true;
    for (int k = 1; k <= d; ++k) b_plain = b_plain && v.b.at(k) > 0;
    bool b_pure = b_plain;
    for (int k = 1; k < d; ++k) b_pure = b_pure && v.b.at(k) <= v.b.at(k + 1);
    if (b_plain != !plain_fail.has_value() || b_pure != !pure_fail.has_value())
        throw Error("internal: b-route verdict disagrees with c-route verdict");

    v.is_quasi_forest_fvector = !plain_fail.has_value();
    v.is_pure_quasi_forest_fvector = !pure_fail.has_value();
    v.failing_index = plain_fail ? plain_fail : pure_fail;
    return v;
}

} // namespace

RealizabilityVerdict is_quasi_forest_fvector(const FVector& f) { return classify(f); }

RealizabilityVerdict is_pure_quasi_forest_fvector(const FVector& f) { return classify(f); }

DeltaESequences decompose(const CSequence& c) {
    const int d = c.d();
    long long total = 0;
    for (long long v : c.entries) total = detail::checked_add(total, v);
    if (total != 1)
        throw ConditionViolatedError("c-sequence entries must sum to 1", 0);

    const std::vector<long long> suffix = suffix_sums(c);
    for (int k = 1; k <= d; ++k)
        if (suffix[static_cast<std::size_t>(k)] <= 0)
            throw ConditionViolatedError(
                "suffix sum at k = " + std::to_string(k) + " is not positive", k);

    DeltaESequences seq;
    for (int i = 0; i <= d; ++i) {
        for (long long m = 0; m < c[i]; ++m) seq.deltas.push_back(i);
        for (long long m = 0; m < -c[i]; ++m) seq.es.push_back(i);
    }
    // Already ascending by construction. The pairwise bound is guaranteed by
    // the suffix-sum condition; treat a violation as an internal fault.
    for (std::size_t j = 0; j < seq.es.size(); ++j)
        if (seq.es[j] >= seq.deltas[j])
            throw Error("internal: decompose produced e_j >= delta_j");
    return seq;
}

DeltaESequences reduce_collisions(DeltaESequences seq) {
    std::map<int, int> delta_count, e_count;
    for (int dl : seq.deltas) ++delta_count[dl];
    for (int e : seq.es) ++e_count[e];

    // Each value shared by both sides loses min(multiplicities) copies from
    // each; (1+x)^v - (1+x)^v = 0, so the signature polynomial is unchanged.
    DeltaESequences out;
    for (auto [v, cnt] : delta_count) {
        auto it = e_count.find(v);
        const int keep = cnt - (it == e_count.end() ? 0 : std::min(cnt, it->second));
        out.deltas.insert(out.deltas.end(), static_cast<std::size_t>(keep), v);
    }
    for (auto [v, cnt] : e_count) {
        auto it = delta_count.find(v);
        const int keep = cnt - (it == delta_count.end() ? 0 : std::min(cnt, it->second));
        out.es.insert(out.es.end(), static_cast<std::size_t>(keep), v);
    }
    return out;
}

namespace {

void validate_sequences(const DeltaESequences& seq) {
    if (seq.deltas.empty())
        throw InvalidSequencesError("deltas must be nonempty");
    if (seq.es.size() + 1 != seq.deltas.size())
        throw InvalidSequencesError("need exactly one more delta than e");
    if (!std::is_sorted(seq.deltas.begin(), seq.deltas.end()))
        throw InvalidSequencesError("unsorted deltas");
    if (!std::is_sorted(seq.es.begin(), seq.es.end()))
        throw InvalidSequencesError("unsorted es");
    if (seq.deltas.front() <= 0)
        throw InvalidSequencesError("delta values must be positive");
    if (!seq.es.empty() && seq.es.front() < 0)
        throw InvalidSequencesError("e values must be non-negative");
    // Shared values between deltas and es are fine here: the recurrence only
    // needs sortedness and e_j < delta_j. Collision-free input is what
    // decompose produces, not a requirement of the construction.
    for (std::size_t j = 0; j < seq.es.size(); ++j)
        if (seq.es[j] >= seq.deltas[j])
            throw InvalidSequencesError("e_" + std::to_string(j + 1) +
                                        " >= delta_" + std::to_string(j + 1));
}

} // namespace

SimplicialComplex construct_forest(const DeltaESequences& seq) {
    validate_sequences(seq);
    const int s = static_cast<int>(seq.es.size());
    const int d = seq.deltas.back();
    long long n = 0;
    for (int dl : seq.deltas) n += dl;
    for (int e : seq.es) n -= e;

    // Facets built top-down: F_{s+1} = {n-d+1, ..., n}, then each F_{j-1}
    // takes delta_{j-1} - e_{j-1} fresh vertices just below min(F_j) plus the
    // e_{j-1} largest vertices of F_j.
    std::vector<std::vector<Vertex>> facets(static_cast<std::size_t>(s) + 1);
    std::vector<Vertex> top(static_cast<std::size_t>(d));
    std::iota(top.begin(), top.end(), static_cast<Vertex>(n - d + 1));
    facets[static_cast<std::size_t>(s)] = std::move(top);

    for (int j = s; j >= 1; --j) {
        const std::vector<Vertex>& q = facets[static_cast<std::size_t>(j)];
        const int delta_prev = seq.deltas[static_cast<std::size_t>(j - 1)];
        const int e_prev = seq.es[static_cast<std::size_t>(j - 1)];
        const int delta_here = static_cast<int>(q.size());

        std::vector<Vertex> prev;
        prev.reserve(static_cast<std::size_t>(delta_prev));
        for (int t = delta_prev - e_prev; t >= 1; --t)
            prev.push_back(q.front() - t);
        for (int t = delta_here - e_prev + 1; t <= delta_here; ++t)
            prev.push_back(q[static_cast<std::size_t>(t - 1)]);
        facets[static_cast<std::size_t>(j - 1)] = std::move(prev);
    }

    std::vector<Face> faces;
    faces.reserve(facets.size());
    for (auto& verts : facets) faces.emplace_back(std::move(verts));
    SimplicialComplex c = from_facets(std::move(faces));
    if (c.vertex_count() != n)
        throw Error("internal: constructed forest has wrong vertex count");
    return c;
}

SimplicialComplex realize(const FVector& f) {
    RealizabilityVerdict verdict = classify(f);
    if (!verdict.is_quasi_forest_fvector)
        throw NotRealizableError(
            "suffix sum at k = " + std::to_string(*verdict.failing_index) +
                " is not positive",
            std::move(verdict));
    SimplicialComplex c = construct_forest(decompose(verdict.c));
    if (!(f_vector(c) == f))
        throw Error("internal: realized complex has a different f-vector");
    return c;
}

UnimodalityReport check_unimodal(const FVector& f) {
    const int d = f.d();
    std::vector<long long> ext;
    ext.reserve(static_cast<std::size_t>(d) + 1);
    ext.push_back(1); // the empty face
    ext.insert(ext.end(), f.entries.begin(), f.entries.end());

    UnimodalityReport r;
    const int p = (d + 1) / 2;
    r.proof_peak_index = p - 1;
    r.proof_peak_chain = true;
    for (int i = 0; i < p; ++i)
        r.proof_peak_chain = r.proof_peak_chain &&
                             ext[static_cast<std::size_t>(i)] <= ext[static_cast<std::size_t>(i + 1)];
    for (int i = p; i < d; ++i)
        r.proof_peak_chain = r.proof_peak_chain &&
                             ext[static_cast<std::size_t>(i)] >= ext[static_cast<std::size_t>(i + 1)];

    int rise = 0;
    while (rise < d && ext[static_cast<std::size_t>(rise)] <= ext[static_cast<std::size_t>(rise + 1)])
        ++rise;
    int fall = d;
    while (fall > 0 && ext[static_cast<std::size_t>(fall - 1)] >= ext[static_cast<std::size_t>(fall)])
        --fall;
    r.unimodal = fall <= rise;

    const auto peak = std::max_element(ext.begin(), ext.end());
    r.peak_index = static_cast<int>(peak - ext.begin()) - 1;
    return r;
}

} // namespace qforest
