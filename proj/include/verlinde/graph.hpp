#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace verlinde {

// Connected 3-regular multigraph (loops allowed, counting 2 toward degree).
// A graph of genus g has 2g-2 vertices and 3g-3 edges; the first Betti
// number edge_count - vertex_count + 1 equals g.
struct TrivalentGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // unordered endpoint pairs; loop when equal
    int genus = 0;
    std::vector<std::string> edge_names;     // empty, or one name per edge

    int edge_count() const { return static_cast<int>(edges.size()); }
    int betti_number() const { return edge_count() - vertex_count + 1; }
    bool is_loop(int e) const { return edges[e].first == edges[e].second; }
};

// Builds a graph with genus derived from the Betti number.
TrivalentGraph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges);

enum class GraphDefect {
    None,
    DegreeViolation,
    Disconnected,
    WrongCounts,
};

struct ValidationResult {
    GraphDefect defect = GraphDefect::None;
    int where = -1;  // offending vertex for degree violations, else -1
    std::string message;

    bool ok() const { return defect == GraphDefect::None; }
};

ValidationResult validate(const TrivalentGraph& g);

// Throws std::invalid_argument when validate() fails.
void require_valid(const TrivalentGraph& g);

// Incident edge ids of one vertex; a loop appears twice. Sorted ascending.
struct VertexTriple {
    int vertex = -1;
    std::array<int, 3> edges{};
};

std::vector<VertexTriple> vertex_triples(const TrivalentGraph& g);

// Edge ids whose removal disconnects the graph; loops are never bridges.
// Sorted ascending.
std::vector<int> bridges(const TrivalentGraph& g);

// Relabeling-invariant certificate: byte 0 is the vertex count, followed by
// the lexicographically minimal column-growth encoding of the adjacency
// multiplicity matrix over all vertex relabelings.
struct CanonicalCertificate {
    std::string bytes;

    std::string hex() const;
    auto operator<=>(const CanonicalCertificate&) const = default;
};

CanonicalCertificate canonical_certificate(const TrivalentGraph& g);

// The canonically relabeled graph itself: vertices renamed to the certificate
// order, edges sorted lexicographically. Edge names are dropped.
TrivalentGraph canonical_form(const TrivalentGraph& g);

// All isomorphism classes of genus g, in certificate order.
// Exhaustive backtracking over sorted edge multisets plus certificate dedup.
std::vector<TrivalentGraph> enumerate_trivalent_graphs(int genus, int max_genus = 5);

// Chain graph of genus g with named edges: loop a1, bridge c1, double edges
// (a_i, a'_i) with bridges c_i between consecutive handles, closing loop ag.
// Edge order: a1, c1, a2, a'2, c2, ..., a_{g-1}, a'_{g-1}, c_{g-1}, ag.
TrivalentGraph gamma0(int genus);

// Index of the edge with the given name; -1 when absent.
int edge_by_name(const TrivalentGraph& g, const std::string& name);

}  // namespace verlinde
