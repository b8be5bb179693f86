#include "qforest/io.hpp"

#include <cctype>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace qforest {

namespace {

bool skippable(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true; // blank
}

long long parse_integer(const std::string& token, const std::string& what) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw ParseError("bad " + what + ": '" + token + "'");
    }
    if (used != token.size())
        throw ParseError("bad " + what + ": '" + token + "'");
    return value;
}

} // namespace

SimplicialComplex read_complex(std::istream& in) {
    std::vector<Face> faces;
    std::string line;
    while (std::getline(in, line)) {
        if (skippable(line)) continue;
        std::istringstream tokens(line);
        std::vector<Vertex> verts;
        std::string tok;
        while (tokens >> tok) {
            const long long v = parse_integer(tok, "vertex label");
            if (v < 1 || v > std::numeric_limits<Vertex>::max())
                throw BadVertexError("vertex labels must be >= 1, got " + tok);
            verts.push_back(static_cast<Vertex>(v));
        }
        faces.emplace_back(std::move(verts));
    }
    if (faces.empty())
        throw EmptyInputError("no facets in input");
    return from_facets(std::move(faces));
}

void write_complex(std::ostream& out, const SimplicialComplex& c) {
    for (const Face& f : c.facets()) {
        const auto& verts = f.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i) out << ' ';
            out << verts[i];
        }
        out << '\n';
    }
}

FVector parse_fvector(const std::string& text) {
    std::vector<long long> entries;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // tolerate surrounding whitespace
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw ParseError("empty f-vector entry");
        entries.push_back(parse_integer(token.substr(first, last - first + 1),
                                        "f-vector entry"));
    }
    if (entries.empty())
        throw ParseError("empty f-vector");
    return FVector(std::move(entries));
}

std::string format_fvector(const FVector& f) { return format_sequence(f.entries); }

std::string format_sequence(const std::vector<long long>& entries) {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries[i]);
    }
    return out;
}

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (skippable(line)) continue;
        std::istringstream tokens(line);
        if (n < 0) {
            std::string marker;
            long long count = -1;
            tokens >> marker;
            std::string tok;
            if (marker != "n" || !(tokens >> tok))
                throw ParseError("graph files start with a line 'n <count>'");
            count = parse_integer(tok, "vertex count");
            if (count < 0 || count > 1'000'000)
                throw ParseError("unreasonable vertex count " + std::to_string(count));
            n = static_cast<int>(count);
            continue;
        }
        std::string a, b, extra;
        if (!(tokens >> a >> b) || (tokens >> extra))
            throw ParseError("edge lines are 'u v': '" + line + "'");
        const long long u = parse_integer(a, "edge endpoint");
        const long long v = parse_integer(b, "edge endpoint");
        if (u >= v)
            throw ParseError("edges must satisfy u < v: '" + line + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0)
        throw ParseError("missing 'n <count>' header");
    return Graph::from_edges(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace qforest
