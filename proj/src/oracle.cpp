#include "domipoly/oracle.hpp"

#include <bit>

namespace domipoly {

Polynomial DominationTally::to_polynomial() const {
    std::vector<BigInt> coeffs;
    coeffs.reserve(counts.size());
    for (const std::uint64_t c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
    return Polynomial(std::move(coeffs));
}

namespace {

// Union of closed neighborhoods over the subset's members, early exit on full.
bool dominates(const std::vector<VertexSet>& closed, VertexSet subset, VertexSet all) {
    VertexSet covered = 0;
    for (VertexSet m = subset; m;) {
        covered |= closed[static_cast<std::size_t>(std::countr_zero(m))];
        if (covered == all) return true;
        m &= m - 1;
    }
    return covered == all;
}

std::vector<VertexSet> closed_masks(const Graph& g) {
    std::vector<VertexSet> closed(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        closed[static_cast<std::size_t>(v)] = g.closed_neighborhood(v);
    return closed;
}

}  // namespace

DominationTally domination_tally(const Graph& g) {
    const int n = g.order();
    DominationTally tally;
    tally.counts.assign(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) return tally;  // the empty set is not counted here
    const auto closed = closed_masks(g);
    const VertexSet all = g.vertex_set();
    const VertexSet end = VertexSet{1} << n;
    for (VertexSet s = 1; s < end; ++s)
        if (dominates(closed, s, all)) ++tally.counts[static_cast<std::size_t>(popcount(s))];
    return tally;
}

Polynomial domination_polynomial(const Graph& g) { return domination_tally(g).to_polynomial(); }

int domination_number(const Graph& g) {
    if (g.order() == 0) throw SpecDomainError("domination number of the empty graph is undefined");
    return static_cast<int>(domination_polynomial(g).min_degree());
}

Polynomial restricted_count_pu(const Graph& g, int u) {
    const VertexSet closed_u = g.closed_neighborhood(u);  // validates u
    const Graph rest = delete_vertices(g, vertex_bit(u));
    const int rn = rest.order();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(rn) + 1, 0);

    // Allowed candidates, reindexed into rest: original vertices outside N[u].
    VertexSet allowed = 0;
    {
        int next = 0;
        for (int v = 0; v < g.order(); ++v) {
            if (v == u) continue;
            if (!(closed_u & vertex_bit(v))) allowed |= vertex_bit(next);
            ++next;
        }
    }

    if (rn == 0) {
        counts[0] = 1;  // the empty set dominates the empty remainder
    } else {
        const auto closed = closed_masks(rest);
        const VertexSet all = rest.vertex_set();
        // Enumerate submasks of `allowed` (including the empty set, which
        // only dominates when rest is empty — excluded on this branch).
        VertexSet s = allowed;
        for (;;) {
            if (s != 0 && dominates(closed, s, all))
                ++counts[static_cast<std::size_t>(popcount(s))];
            if (s == 0) break;
            s = (s - 1) & allowed;
        }
    }

    DominationTally tally;
    tally.counts = std::move(counts);
    return tally.to_polynomial();
}

}  // namespace domipoly
