#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qforest/complex.hpp"
#include "qforest/graphs.hpp"

namespace qforest {

/// Bounds for the exhaustive enumerators. Hard caps: 7 vertices, 5 facets.
struct EnumerationScope {
    int max_vertices = 5;
    int max_facets = 4;
    std::optional<int> max_dimension;
};

/// All 2^C(n,2) labeled graphs on exactly n vertices, ordered by edge-set
/// bitmask (pairs enumerated (1,2), (1,3), ..., (1,n), (2,3), ...). The
/// visitor returns false to stop early.
void enumerate_graphs(int n, const std::function<bool(const Graph&)>& visit);

/// Every quasi-forest whose vertices lie in {1, ..., max_vertices} with at
/// most max_facets facets (and facet cardinality at most max_dimension + 1
/// when set), generated by attaching one leaf at a time and deduplicated by
/// facet-set identity. Deterministic order. The stream is capped at 10^7
/// items (ResourceLimitError beyond).
void enumerate_quasi_forests(const EnumerationScope& scope,
                             const std::function<bool(const SimplicialComplex&)>& visit);

std::vector<SimplicialComplex> all_quasi_forests(const EnumerationScope& scope);

struct PropertyResult {
    std::string name;
    long long instances = 0;
    bool passed = false;
    std::string counterexample; // empty when passed
};

struct ValidationReport {
    std::vector<PropertyResult> properties;
    bool all_passed() const;
};

/// Runs the cross-checks between the enumerators, the f-vector tests, the
/// recognizer and the graph layer over everything in scope. Any
/// counterexample is reported with the first offending instance.
ValidationReport cross_validate(const EnumerationScope& scope);

/// One line per property: name, instance count, pass/FAIL, counterexample.
void write_report(std::ostream& os, const ValidationReport& report);

} // namespace qforest
