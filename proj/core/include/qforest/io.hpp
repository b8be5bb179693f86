#pragma once

#include <iosfwd>
#include <string>

#include "qforest/complex.hpp"
#include "qforest/graphs.hpp"

namespace qforest {

// Complex text format: one facet per line as space-separated positive
// integers; blank lines and lines starting with '#' are skipped; faces need
// not be maximal (they are pruned on read).
SimplicialComplex read_complex(std::istream& in);
void write_complex(std::ostream& out, const SimplicialComplex& c);

// f-vector text format: comma-separated positive integers, e.g. "5,6,2".
FVector parse_fvector(const std::string& text);
std::string format_fvector(const FVector& f);

/// Comma-separated signed integers (used for c-, b- and h-sequences).
std::string format_sequence(const std::vector<long long>& entries);

// Graph text format: first non-comment line "n <count>", then one edge
// "u v" per line with 1 <= u < v <= n.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

} // namespace qforest
