#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "domipoly/errors.hpp"

namespace domipoly {

/// Vertex subsets are single-word bitmasks; bit v = vertex index v.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 63;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
constexpr VertexSet full_vertex_set(int n) { return n == 0 ? 0 : (VertexSet{1} << n) - 1; }
int popcount(VertexSet s);

/// Immutable simple graph on at most 63 vertices.
///
/// Adjacency is one neighbor mask per vertex. Every constructor validates
/// symmetry, loop-freeness and index range; all derived-graph operations
/// return fresh values.
class Graph {
public:
    Graph() = default;  // the empty graph (0 vertices)
    /// n isolated vertices.
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_adjacency(std::vector<VertexSet> adj);

    int order() const { return n_; }
    std::size_t edge_count() const;
    int degree(int v) const { return popcount(neighbors(v)); }
    bool has_edge(int u, int v) const;
    /// N(v)
    VertexSet neighbors(int v) const;
    /// N[v] = N(v) ∪ {v}
    VertexSet closed_neighborhood(int v) const;
    VertexSet vertex_set() const { return full_vertex_set(n_); }

    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    void check_vertex(int v) const;
    void validate() const;

    friend Graph delete_vertices(const Graph&, VertexSet);
    friend Graph contract_vertex(const Graph&, int);
    friend Graph join(const Graph&, const Graph&);
    friend Graph disjoint_union(const Graph&, const Graph&);
    friend Graph corona(const Graph&, const Graph&);
};

/// Induced subgraph on V \ s; survivors keep their relative order.
Graph delete_vertices(const Graph& g, VertexSet s);

/// Joins all neighbors of u pairwise, then deletes u.
Graph contract_vertex(const Graph& g, int u);

/// g1 + g2: disjoint union plus all cross edges. g2's vertices follow g1's.
Graph join(const Graph& g1, const Graph& g2);

Graph disjoint_union(const Graph& g1, const Graph& g2);

/// g ∘ h: one copy of h per vertex of g, each copy fully joined to its host.
/// Layout: g's vertices first, then copy i at block g.order() + i*h.order().
Graph corona(const Graph& g, const Graph& h);

/// α(g) by subset enumeration (exponential; fine for the sizes used here).
int independence_number(const Graph& g);

/// Vertex sets of the connected components, sorted by lowest member.
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace domipoly
