#include "domipoly/graph.hpp"

#include <bit>
#include <string>

namespace domipoly {

int popcount(VertexSet s) { return std::popcount(s); }

namespace {

void check_order(long long n) {
    if (n < 0 || n > kMaxVertices)
        throw CapacityError("graph order " + std::to_string(n) + " outside [0, 63]");
}

}  // namespace

Graph::Graph(int n) {
    check_order(n);
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidVertexError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
        adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
    }
    validate();
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
    check_order(static_cast<long long>(adj.size()));
    Graph g;
    g.n_ = static_cast<int>(adj.size());
    g.adj_ = std::move(adj);
    g.validate();
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidVertexError("vertex " + std::to_string(v) + " out of range for order " +
                                 std::to_string(n_));
}

void Graph::validate() const {
    const VertexSet all = vertex_set();
    for (int v = 0; v < n_; ++v) {
        const VertexSet nv = adj_[static_cast<std::size_t>(v)];
        if (nv & ~all) throw InvalidVertexError("neighbor index out of range");
        if (nv & vertex_bit(v)) throw InvalidVertexError("self-loop at vertex " + std::to_string(v));
        for (VertexSet m = nv; m;) {
            const int u = std::countr_zero(m);
            m &= m - 1;
            if (!(adj_[static_cast<std::size_t>(u)] & vertex_bit(v)))
                throw InvalidVertexError("asymmetric adjacency");
        }
    }
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const VertexSet nv : adj_) twice += static_cast<std::size_t>(popcount(nv));
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] & vertex_bit(v)) != 0;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

VertexSet Graph::closed_neighborhood(int v) const { return neighbors(v) | vertex_bit(v); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (VertexSet m = adj_[static_cast<std::size_t>(u)] & ~full_vertex_set(u + 1); m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            out.emplace_back(u, v);
        }
    return out;
}

Graph delete_vertices(const Graph& g, VertexSet s) {
    if (s & ~g.vertex_set()) throw InvalidVertexError("deletion set not within the vertex set");
    const VertexSet keep = g.vertex_set() & ~s;
    std::vector<int> new_index(static_cast<std::size_t>(g.n_), -1);
    int next = 0;
    for (VertexSet m = keep; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        new_index[static_cast<std::size_t>(v)] = next++;
    }
    std::vector<VertexSet> adj(static_cast<std::size_t>(next), 0);
    for (VertexSet m = keep; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        VertexSet row = 0;
        for (VertexSet nb = g.adj_[static_cast<std::size_t>(v)] & keep; nb;) {
            const int u = std::countr_zero(nb);
            nb &= nb - 1;
            row |= vertex_bit(new_index[static_cast<std::size_t>(u)]);
        }
        adj[static_cast<std::size_t>(new_index[static_cast<std::size_t>(v)])] = row;
    }
    return Graph::from_adjacency(std::move(adj));
}

Graph contract_vertex(const Graph& g, int u) {
    g.check_vertex(u);
    Graph joined = g;
    const VertexSet nu = g.neighbors(u);
    for (VertexSet m = nu; m;) {
        const int a = std::countr_zero(m);
        m &= m - 1;
        joined.adj_[static_cast<std::size_t>(a)] |= nu & ~vertex_bit(a);
    }
    return delete_vertices(joined, vertex_bit(u));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    check_order(static_cast<long long>(g1.n_) + g2.n_);
    std::vector<VertexSet> adj(static_cast<std::size_t>(g1.n_ + g2.n_), 0);
    for (int v = 0; v < g1.n_; ++v) adj[static_cast<std::size_t>(v)] = g1.adj_[static_cast<std::size_t>(v)];
    for (int v = 0; v < g2.n_; ++v)
        adj[static_cast<std::size_t>(g1.n_ + v)] = g2.adj_[static_cast<std::size_t>(v)] << g1.n_;
    return Graph::from_adjacency(std::move(adj));
}

Graph join(const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    const VertexSet left = full_vertex_set(g1.n_);
    const VertexSet right = g.vertex_set() & ~left;
    for (int v = 0; v < g1.n_; ++v) g.adj_[static_cast<std::size_t>(v)] |= right;
    for (int v = g1.n_; v < g.n_; ++v) g.adj_[static_cast<std::size_t>(v)] |= left;
    return g;
}

Graph corona(const Graph& g, const Graph& h) {
    if (g.order() < 1) throw SpecDomainError("corona requires a nonempty host graph");
    const long long total = static_cast<long long>(g.n_) * (1 + h.n_);
    check_order(total);
    std::vector<VertexSet> adj(static_cast<std::size_t>(total), 0);
    for (int v = 0; v < g.n_; ++v) adj[static_cast<std::size_t>(v)] = g.adj_[static_cast<std::size_t>(v)];
    for (int i = 0; i < g.n_; ++i) {
        const int base = g.n_ + i * h.n_;
        for (int v = 0; v < h.n_; ++v) {
            adj[static_cast<std::size_t>(base + v)] =
                (h.adj_[static_cast<std::size_t>(v)] << base) | vertex_bit(i);
            adj[static_cast<std::size_t>(i)] |= vertex_bit(base + v);
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

int independence_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    std::vector<VertexSet> nb(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nb[static_cast<std::size_t>(v)] = g.neighbors(v);
    int best = 0;
    const VertexSet end = VertexSet{1} << n;
    for (VertexSet s = 0; s < end; ++s) {
        if (popcount(s) <= best) continue;
        bool independent = true;
        for (VertexSet m = s; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            if (nb[static_cast<std::size_t>(v)] & s) {
                independent = false;
                break;
            }
        }
        if (independent) best = popcount(s);
    }
    return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet unseen = g.vertex_set();
    while (unseen) {
        VertexSet comp = vertex_bit(std::countr_zero(unseen));
        for (;;) {
            VertexSet grown = comp;
            for (VertexSet m = comp; m;) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                grown |= g.neighbors(v);
            }
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        unseen &= ~comp;
    }
    return comps;
}

}  // namespace domipoly
