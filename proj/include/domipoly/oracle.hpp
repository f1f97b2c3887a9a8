#pragma once

#include <cstdint>
#include <vector>

#include "domipoly/graph.hpp"
#include "domipoly/polynomial.hpp"

namespace domipoly {

/// Soft performance bound for full subset enumeration. Not enforced by the
/// library (the 63-vertex carrier is the hard bound); the CLI guards with it.
constexpr int kOracleSoftBound = 24;

/// counts[i] = number of dominating sets of size i, for i = 0..n.
/// Entries fit in 64 bits because n <= 63 caps each count at C(63,31).
struct DominationTally {
    std::vector<std::uint64_t> counts;
    Polynomial to_polynomial() const;
};

/// Exhaustive tally over all 2^n vertex subsets.
DominationTally domination_tally(const Graph& g);

/// Ground-truth D(G,x). The 0-vertex graph yields the zero polynomial
/// (the recurrence engine maps empty subterms to 1 instead; see there).
Polynomial domination_polynomial(const Graph& g);

/// γ(G) = min_degree of the oracle polynomial. Requires order >= 1.
int domination_number(const Graph& g);

/// Size-generating polynomial of the sets S ⊆ V \ N[u] that dominate G−u.
/// When G−u has no vertices the empty set counts (vacuous domination), so
/// the result is 1; the vertex-expansion identities rely on that case.
Polynomial restricted_count_pu(const Graph& g, int u);

}  // namespace domipoly
