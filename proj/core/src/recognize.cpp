#include "qforest/recognize.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

namespace qforest {

namespace {

constexpr int kMaxFacets = 20;

// Facets as bitsets over the complex's vertex list, with all pairwise
// intersections precomputed. Word count handles complexes with more than 64
// distinct vertices.
struct FacetTable {
    int count = 0;
    std::size_t words = 1;
    std::vector<std::uint64_t> sets;   // facet i at [i * words, (i+1) * words)
    std::vector<std::uint64_t> inters; // (i * count + j) * words

    explicit FacetTable(const SimplicialComplex& c) {
        const std::vector<Vertex>& verts = c.vertices();
        count = static_cast<int>(c.facets().size());
        words = verts.size() / 64 + 1;
        sets.assign(static_cast<std::size_t>(count) * words, 0);
        for (int i = 0; i < count; ++i)
            for (Vertex v : c.facets()[static_cast<std::size_t>(i)].vertices()) {
                std::size_t idx = static_cast<std::size_t>(
                    std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
                set_word(i)[idx / 64] |= std::uint64_t{1} << (idx % 64);
            }
        inters.assign(static_cast<std::size_t>(count) * static_cast<std::size_t>(count) * words, 0);
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < count; ++j)
                for (std::size_t w = 0; w < words; ++w)
                    inter_word(i, j)[w] = set_word(i)[w] & set_word(j)[w];
    }

    std::uint64_t* set_word(int i) { return sets.data() + static_cast<std::size_t>(i) * words; }
    const std::uint64_t* set_word(int i) const {
        return sets.data() + static_cast<std::size_t>(i) * words;
    }
    const std::uint64_t* inter_word(int i, int j) const {
        return inters.data() +
               (static_cast<std::size_t>(i) * static_cast<std::size_t>(count) +
                static_cast<std::size_t>(j)) * words;
    }
    std::uint64_t* inter_word(int i, int j) {
        return inters.data() +
               (static_cast<std::size_t>(i) * static_cast<std::size_t>(count) +
                static_cast<std::size_t>(j)) * words;
    }

    bool inter_subset(int h, int f, int g) const {
        // (F_h meet F_f) subseteq (F_g meet F_f)
        const std::uint64_t* a = inter_word(h, f);
        const std::uint64_t* b = inter_word(g, f);
        for (std::size_t w = 0; w < words; ++w)
            if ((a[w] & ~b[w]) != 0) return false;
        return true;
    }
};

// Candidate branches of facet f within the facet subset `active`.
// f is a leaf of the generated subcomplex iff some candidate exists.
std::optional<int> find_branch(const FacetTable& t, std::uint32_t active, int f) {
    for (int g = 0; g < t.count; ++g) {
        if (g == f || !(active >> g & 1)) continue;
        bool ok = true;
        for (int h = 0; h < t.count && ok; ++h) {
            if (h == f || h == g || !(active >> h & 1)) continue;
            ok = t.inter_subset(h, f, g);
        }
        if (ok) return g;
    }
    return std::nullopt;
}

// Peel-order search over the subset `remaining`; returns facet indices in
// build order (base facet first). Greedy leaf removal, with memoized
// backtracking so an unlucky greedy choice cannot cause a false negative.
bool solve_order(const FacetTable& t, std::uint32_t remaining,
                 std::unordered_set<std::uint32_t>& dead, std::vector<int>& build) {
    if (std::popcount(remaining) == 1) {
        build.push_back(std::countr_zero(remaining));
        return true;
    }
    if (dead.contains(remaining)) return false;
    for (int f = 0; f < t.count; ++f) {
        if (!(remaining >> f & 1)) continue;
        if (!find_branch(t, remaining, f)) continue;
        if (solve_order(t, remaining & ~(std::uint32_t{1} << f), dead, build)) {
            build.push_back(f);
            return true;
        }
    }
    dead.insert(remaining);
    return false;
}

void check_facet_cap(const SimplicialComplex& c) {
    if (c.facets().size() > kMaxFacets)
        throw ResourceLimitError("leaf-order search limited to " +
                                 std::to_string(kMaxFacets) + " facets");
}

} // namespace

std::optional<Face> branch_of(const SimplicialComplex& c, const Face& f) {
    if (!c.has_facet(f))
        throw NotAFacetError("branch_of: not a facet of the complex");
    for (const Face& g : c.facets()) {
        if (g == f) continue;
        const Face gf = intersect(g, f);
        bool ok = true;
        for (const Face& h : c.facets()) {
            if (h == f || h == g) continue;
            if (!intersect(h, f).subset_of(gf)) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return std::nullopt;
}

RecognitionReport leaf_order(const SimplicialComplex& c) {
    check_facet_cap(c);
    RecognitionReport r;
    const auto& facets = c.facets();
    if (facets.size() == 1) {
        r.is_quasi_forest = true;
        r.leaf_order = facets;
        return r;
    }

    FacetTable t(c);
    std::unordered_set<std::uint32_t> dead;
    std::vector<int> build;
    const std::uint32_t all = (std::uint32_t{1} << facets.size()) - 1;
    if (solve_order(t, all, dead, build)) {
        r.is_quasi_forest = true;
        std::vector<Face> order;
        order.reserve(build.size());
        for (int idx : build) order.push_back(facets[static_cast<std::size_t>(idx)]);
        r.leaf_order = std::move(order);
    }
    return r;
}

RecognitionReport is_forest(const SimplicialComplex& c) {
    check_facet_cap(c);
    RecognitionReport r = leaf_order(c);
    const auto& facets = c.facets();
    const int s = static_cast<int>(facets.size());
    if (s == 1) {
        r.is_forest = true;
        return r;
    }

    FacetTable t(c);
    // Subsets in increasing size, within a size in lexicographic order of
    // index sets, so the reported witness is the smallest refutation.
    std::vector<int> pick;
    for (int q = 2; q <= s; ++q) {
        pick.assign(static_cast<std::size_t>(q), 0);
        for (int i = 0; i < q; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint32_t subset = 0;
            for (int i : pick) subset |= std::uint32_t{1} << i;
            bool has_leaf = false;
            for (int f = 0; f < s && !has_leaf; ++f)
                if ((subset >> f & 1) && find_branch(t, subset, f)) has_leaf = true;
            if (!has_leaf) {
                std::vector<Face> witness;
                for (int i : pick) witness.push_back(facets[static_cast<std::size_t>(i)]);
                r.is_forest = false;
                r.witness = std::move(witness);
                return r;
            }
            // next combination
            int pos = q - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == s - q + pos) --pos;
            if (pos < 0) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < q; ++i)
                pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    r.is_forest = true;
    return r;
}

LeafOrderCheck verify_leaf_order(const SimplicialComplex& c,
                                 const std::vector<Face>& ordering) {
    std::vector<Face> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.facets())
        throw NotAPermutationError("ordering is not a permutation of the facet set");

    const auto& facets = c.facets();
    FacetTable t(c);
    std::vector<int> position(ordering.size());
    for (std::size_t i = 0; i < ordering.size(); ++i)
        position[i] = static_cast<int>(
            std::lower_bound(facets.begin(), facets.end(), ordering[i]) - facets.begin());

    LeafOrderCheck check;
    check.valid = true;
    std::uint32_t prefix = std::uint32_t{1} << position[0];
    for (std::size_t j = 1; j < ordering.size(); ++j) {
        prefix |= std::uint32_t{1} << position[j];
        std::optional<int> g = find_branch(t, prefix, position[j]);
        if (!g) {
            check.valid = false;
            check.failing_prefix = static_cast<int>(j) + 1;
            return check;
        }
        LeafStep step;
        step.facet = ordering[j];
        step.branch = facets[static_cast<std::size_t>(*g)];
        step.delta = static_cast<int>(step.facet.size());
        step.e = static_cast<int>(intersect(step.facet, step.branch).size());
        check.steps.push_back(std::move(step));
    }
    return check;
}

} // namespace qforest
