#include "qforest/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "qforest/characterize.hpp"
#include "qforest/recognize.hpp"
#include "qforest/transforms.hpp"

namespace qforest {

namespace {

constexpr int kMaxEnumVertices = 7;
constexpr int kMaxEnumFacets = 5;
constexpr long long kStreamCap = 10'000'000;

void validate_scope(const EnumerationScope& scope) {
    if (scope.max_vertices < 1 || scope.max_vertices > kMaxEnumVertices)
        throw ResourceLimitError("max_vertices must be in 1.." +
                                 std::to_string(kMaxEnumVertices));
    if (scope.max_facets < 1 || scope.max_facets > kMaxEnumFacets)
        throw ResourceLimitError("max_facets must be in 1.." +
                                 std::to_string(kMaxEnumFacets));
    if (scope.max_dimension && *scope.max_dimension < 0)
        throw ResourceLimitError("max_dimension must be non-negative");
}

using FacetMask = std::uint8_t; // vertex i of [7] at bit i-1

SimplicialComplex masks_to_complex(const std::vector<FacetMask>& masks) {
    std::vector<Face> faces;
    faces.reserve(masks.size());
    for (FacetMask m : masks) {
        std::vector<Vertex> verts;
        for (int b = 0; b < 8; ++b)
            if (m >> b & 1) verts.push_back(b + 1);
        faces.emplace_back(std::move(verts));
    }
    return from_facets(std::move(faces));
}

std::uint64_t pack_state(const std::vector<FacetMask>& masks) {
    std::uint64_t key = 0;
    for (FacetMask m : masks) key = key << 8 | m;
    return key;
}

// F would be a leaf of <facets..., F> with some existing facet as branch.
bool mask_is_leaf(const std::vector<FacetMask>& facets, FacetMask f) {
    for (FacetMask g : facets) {
        bool ok = true;
        for (FacetMask h : facets) {
            if (h == g) continue;
            if ((h & f) & ~(g & f)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::string format_entries(const std::vector<long long>& entries) {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries[i]);
    }
    return out;
}

std::string format_complex(const SimplicialComplex& c) {
    std::string out;
    for (std::size_t i = 0; i < c.facets().size(); ++i) {
        if (i) out += " | ";
        const auto& verts = c.facets()[i].vertices();
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(verts[j]);
        }
    }
    return out;
}

std::string format_graph(const Graph& g) {
    std::string out = "n=" + std::to_string(g.vertex_count()) + " edges=";
    for (auto [u, v] : g.edges())
        out += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    return out;
}

} // namespace

void enumerate_graphs(int n, const std::function<bool(const Graph&)>& visit) {
    if (n < 1 || n > kMaxEnumVertices)
        throw ResourceLimitError("graph enumeration limited to 1.." +
                                 std::to_string(kMaxEnumVertices) + " vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    const std::uint32_t limit = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1) edges.push_back(pairs[k]);
        if (!visit(Graph::from_edges(n, edges))) return;
    }
}

void enumerate_quasi_forests(const EnumerationScope& scope,
                             const std::function<bool(const SimplicialComplex&)>& visit) {
    validate_scope(scope);
    const int card_cap =
        scope.max_dimension ? std::min(*scope.max_dimension + 1, scope.max_vertices)
                            : scope.max_vertices;

    std::vector<FacetMask> candidates;
    for (int m = 1; m < (1 << scope.max_vertices); ++m)
        if (std::popcount(static_cast<unsigned>(m)) <= card_cap)
            candidates.push_back(static_cast<FacetMask>(m));

    std::deque<std::vector<FacetMask>> queue;
    std::unordered_set<std::uint64_t> seen;
    long long emitted = 0;
    for (FacetMask m : candidates) {
        queue.push_back({m});
        seen.insert(pack_state({m}));
    }

    while (!queue.empty()) {
        std::vector<FacetMask> state = std::move(queue.front());
        queue.pop_front();
        if (++emitted > kStreamCap)
            throw ResourceLimitError("quasi-forest stream exceeded its item cap");
        if (!visit(masks_to_complex(state))) return;

        if (static_cast<int>(state.size()) >= scope.max_facets) continue;
        for (FacetMask f : candidates) {
            bool antichain = true;
            for (FacetMask m : state) {
                if ((m & f) == m || (m & f) == f) {
                    antichain = false;
                    break;
                }
            }
            if (!antichain || !mask_is_leaf(state, f)) continue;
            std::vector<FacetMask> next = state;
            next.insert(std::upper_bound(next.begin(), next.end(), f), f);
            if (seen.insert(pack_state(next)).second) queue.push_back(std::move(next));
        }
    }
}

std::vector<SimplicialComplex> all_quasi_forests(const EnumerationScope& scope) {
    std::vector<SimplicialComplex> out;
    enumerate_quasi_forests(scope, [&](const SimplicialComplex& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

bool ValidationReport::all_passed() const {
    for (const PropertyResult& p : properties)
        if (!p.passed) return false;
    return true;
}

namespace {

// Every positive sequence with f_0 <= max_vertices, f_i <= C(f_0, i+1) and
// at most dmax entries. Any f-vector of a complex on max_vertices vertices
// satisfies these bounds.
void for_each_candidate_fvector(int max_vertices, int dmax,
                                const std::function<void(const FVector&)>& fn) {
    std::vector<long long> entries;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth > 0) fn(FVector(entries));
        if (depth == dmax) return;
        const long long cap =
            depth == 0 ? max_vertices
                       : binomial(static_cast<int>(entries[0]), depth + 1);
        for (long long v = 1; v <= cap; ++v) {
            entries.push_back(v);
            self(self, depth + 1);
            entries.pop_back();
        }
    };
    rec(rec, 0);
}

// How many facets the explicit realization of f uses.
long long minimal_facet_count(const CSequence& c) {
    long long count = 0;
    for (long long v : c.entries)
        if (v > 0) count += v;
    return count;
}

// Definitional chordality: every simple cycle of length >= 4 has a chord.
// Independent of the elimination-order route in is_chordal.
bool cycle_scan_chordal(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> path;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    auto has_chord = [&]() {
        for (std::size_t i = 0; i < path.size(); ++i)
            for (std::size_t j = i + 2; j < path.size(); ++j) {
                if (i == 0 && j == path.size() - 1) continue;
                if (g.adjacent(path[i], path[j])) return true;
            }
        return false;
    };
    auto rec = [&](auto&& self, int root) -> bool {
        const int v = path.back();
        if (path.size() >= 4 && g.adjacent(v, root) && path[1] < path.back() &&
            !has_chord())
            return false;
        for (int u = root + 1; u <= n; ++u) {
            if (used[static_cast<std::size_t>(u)] || !g.adjacent(v, u)) continue;
            path.push_back(u);
            used[static_cast<std::size_t>(u)] = true;
            const bool ok = self(self, root);
            used[static_cast<std::size_t>(u)] = false;
            path.pop_back();
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

struct PropertyBuilder {
    PropertyResult result;

    explicit PropertyBuilder(std::string name) {
        result.name = std::move(name);
        result.passed = true;
    }

    void tally() { ++result.instances; }

    void fail(const std::string& counterexample) {
        if (result.passed) {
            result.passed = false;
            result.counterexample = counterexample;
        }
    }
};

} // namespace

ValidationReport cross_validate(const EnumerationScope& scope) {
    validate_scope(scope);
    ValidationReport report;

    const std::vector<SimplicialComplex> qfs = all_quasi_forests(scope);
    const int dmax = scope.max_dimension
                         ? std::min(*scope.max_dimension + 1, scope.max_vertices)
                         : scope.max_vertices;

    std::set<std::vector<long long>> qf_fvectors;
    std::set<std::vector<long long>> pure_qf_fvectors;
    std::set<std::vector<long long>> forest_fvectors;

    PropertyBuilder replay("leaf-order-replay-matches-f-polynomial");
    PropertyBuilder interleave("leaf-order-overlaps-interleave");
    PropertyBuilder unimodal("pure-quasi-forest-fvector-unimodal");
    PropertyBuilder accepted("enumerated-complex-accepted-by-leaf-order");

    for (const SimplicialComplex& c : qfs) {
        const FVector f = f_vector(c);
        qf_fvectors.insert(f.entries);

        accepted.tally();
        RecognitionReport rec = is_forest(c);
        if (!rec.is_quasi_forest) accepted.fail(format_complex(c));
        if (rec.is_forest.value()) forest_fvectors.insert(f.entries);

        if (rec.leaf_order) {
            replay.tally();
            const LeafOrderCheck check = verify_leaf_order(c, *rec.leaf_order);
            std::vector<int> deltas{static_cast<int>((*rec.leaf_order)[0].size())};
            std::vector<int> es;
            for (const LeafStep& step : check.steps) {
                deltas.push_back(step.delta);
                es.push_back(step.e);
            }
            if (!check.valid ||
                !(facet_signature_polynomial(deltas, es) == f_polynomial(f)))
                replay.fail(format_complex(c));

            interleave.tally();
            std::sort(deltas.begin(), deltas.end());
            std::sort(es.begin(), es.end());
            for (std::size_t j = 0; j < es.size(); ++j)
                if (es[j] >= deltas[j]) interleave.fail(format_complex(c));
        }

        if (c.is_pure()) {
            pure_qf_fvectors.insert(f.entries);
            unimodal.tally();
            if (!check_unimodal(f).proof_peak_chain) unimodal.fail(format_complex(c));
        }
    }

    // Set equality between enumerated f-vectors and the suffix-sum test,
    // restricted to sequences whose explicit realization fits the scope.
    PropertyBuilder sets("qf-fvector-set-matches-suffix-sum-test");
    PropertyBuilder pure_sets("pure-qf-fvector-set-matches-pure-test");
    PropertyBuilder bridge("suffix-sum-test-agrees-with-b-test");
    std::set<std::vector<long long>> passing;
    std::set<std::vector<long long>> pure_passing;
    for_each_candidate_fvector(scope.max_vertices, dmax, [&](const FVector& f) {
        const CSequence c = c_sequence(f);
        const BSequence b = b_sequence(f);
        const int d = f.d();

        bridge.tally();
        bool plain_c = true, pure_c = true;
        long long suffix = 0;
        for (int k = d; k >= 1; --k) {
            suffix += c[k];
            plain_c = plain_c && suffix > 0;
        }
        for (int i = 1; i < d; ++i) pure_c = pure_c && c[i] <= 0;
        pure_c = pure_c && plain_c;
        bool plain_b = true, pure_b = true;
        for (int k = 1; k <= d; ++k) plain_b = plain_b && b.at(k) > 0;
        for (int k = 1; k < d; ++k) pure_b = pure_b && b.at(k) <= b.at(k + 1);
        pure_b = pure_b && plain_b;
        if (plain_c != plain_b || pure_c != pure_b)
            bridge.fail("f=" + format_entries(f.entries));

        sets.tally();
        pure_sets.tally();
        if (plain_c && minimal_facet_count(c) <= scope.max_facets) {
            passing.insert(f.entries);
            if (pure_c) pure_passing.insert(f.entries);
        }
    });
    auto compare_sets = [&](PropertyBuilder& prop, const std::set<std::vector<long long>>& a,
                            const std::set<std::vector<long long>>& b) {
        for (const auto& f : a)
            if (!b.contains(f)) prop.fail("f=" + format_entries(f));
        for (const auto& f : b)
            if (!a.contains(f)) prop.fail("f=" + format_entries(f));
    };
    compare_sets(sets, qf_fvectors, passing);
    compare_sets(pure_sets, pure_qf_fvectors, pure_passing);

    PropertyBuilder coincide("forest-fvector-set-coincides-with-qf-set");
    coincide.result.instances = static_cast<long long>(qf_fvectors.size());
    if (!(forest_fvectors == qf_fvectors)) {
        for (const auto& f : qf_fvectors)
            if (!forest_fvectors.contains(f)) {
                coincide.fail("f=" + format_entries(f));
                break;
            }
    }

    // Graph layer. The chordal sweep runs to 7 vertices, the sweeps that
    // need full cycle enumeration stop at 6.
    PropertyBuilder chordal_qf("chordal-clique-complex-is-quasi-forest");
    PropertyBuilder strong_forest("strongly-chordal-clique-complex-is-forest");
    PropertyBuilder nonchordal("non-chordal-refuted-or-fvector-still-passes");
    PropertyBuilder chordal_def("chordality-agrees-with-cycle-scan");
    for (int n = 1; n <= scope.max_vertices; ++n) {
        const bool cycle_checks = n <= 6;
        enumerate_graphs(n, [&](const Graph& g) {
            const ChordalityReport ch = is_chordal(g);
            if (ch.chordal) {
                chordal_qf.tally();
                const SimplicialComplex cc = clique_complex(g);
                if (!leaf_order(cc).is_quasi_forest) chordal_qf.fail(format_graph(g));
                if (cycle_checks && is_strongly_chordal(g).strongly_chordal) {
                    strong_forest.tally();
                    if (!is_forest(cc).is_forest.value())
                        strong_forest.fail(format_graph(g));
                }
            } else if (cycle_checks) {
                nonchordal.tally();
                const SimplicialComplex cc = clique_complex(g);
                if (leaf_order(cc).is_quasi_forest &&
                    !is_quasi_forest_fvector(f_vector(cc)).is_quasi_forest_fvector)
                    nonchordal.fail(format_graph(g));
            }
            if (cycle_checks) {
                chordal_def.tally();
                if (ch.chordal != cycle_scan_chordal(g)) chordal_def.fail(format_graph(g));
            }
            return true;
        });
    }

    // Two runs of the enumerator must produce the same stream.
    PropertyBuilder determinism("enumeration-is-deterministic");
    determinism.result.instances = static_cast<long long>(qfs.size());
    {
        std::size_t at = 0;
        bool same = true;
        enumerate_quasi_forests(scope, [&](const SimplicialComplex& c) {
            same = at < qfs.size() && c == qfs[at];
            ++at;
            return same;
        });
        if (!same || at != qfs.size()) determinism.fail("streams differ");
    }

    report.properties = {sets.result,           pure_sets.result,   bridge.result,
                         coincide.result,       accepted.result,    replay.result,
                         interleave.result,     unimodal.result,    chordal_qf.result,
                         strong_forest.result,  nonchordal.result,  chordal_def.result,
                         determinism.result};
    return report;
}

void write_report(std::ostream& os, const ValidationReport& report) {
    for (const PropertyResult& p : report.properties) {
        os << p.name << ": instances=" << p.instances << ' '
           << (p.passed ? "pass" : "FAIL");
        if (!p.passed) os << " counterexample: " << p.counterexample;
        os << '\n';
    }
}

} // namespace qforest
