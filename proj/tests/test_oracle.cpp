#include <doctest.h>

#include "domipoly/families.hpp"
#include "domipoly/oracle.hpp"
#include "domipoly/recurrence.hpp"
#include "testutil.hpp"

using namespace domipoly;
using testutil::P;

namespace {

Graph family(const char* text) { return generate(FamilySpec::parse(text)); }

BigInt binomial(int n, int k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace

TEST_CASE("domination polynomials of the base fixtures") {
    CHECK(domination_polynomial(family("path:2")) == P({0, 2, 1}));
    CHECK(domination_polynomial(family("cycle:3")) == P({0, 3, 3, 1}));
    CHECK(domination_polynomial(family("path:4")) == P({0, 0, 4, 4, 1}));
    CHECK(domination_polynomial(family("kstar:2:4")) == P({0, 2, 6, 4, 1}));
    CHECK(domination_polynomial(Graph()) == Polynomial::zero());
    CHECK(domination_polynomial(Graph(1)) == P({0, 1}));
    CHECK(domination_polynomial(Graph(3)) == Polynomial::monomial(3));  // isolated vertices
}

TEST_CASE("domination numbers") {
    CHECK(domination_number(family("kpath:2:7")) == 2);
    CHECK(domination_number(family("kwheel:3:8")) == 1);
    CHECK(domination_number(family("complete:6")) == 1);
    CHECK_THROWS_AS(domination_number(Graph()), SpecDomainError);
}

TEST_CASE("tally invariants") {
    testutil::SplitMix64 rng(0xABCD);
    for (int i = 0; i < 25; ++i) {
        const Graph g = testutil::random_graph(rng, 1, 9);
        const DominationTally tally = domination_tally(g);
        const int n = g.order();
        REQUIRE(tally.counts.size() == static_cast<std::size_t>(n) + 1);
        CHECK(tally.counts.back() == 1);  // V always dominates
        const Polynomial d = tally.to_polynomial();
        const std::size_t gamma = d.min_degree();
        for (std::size_t s = 0; s < gamma; ++s) CHECK(tally.counts[s] == 0);
        for (int s = 0; s <= n; ++s)
            CHECK(BigInt(static_cast<unsigned long>(tally.counts[static_cast<std::size_t>(s)])) <=
                  binomial(n, s));
        // Leading structure: degree n, monic; d(G, n-1) = n when no vertex is isolated.
        CHECK(d.degree() == static_cast<std::size_t>(n));
        CHECK(d.coeff(static_cast<std::size_t>(n)) == 1);
        bool isolated = false;
        for (int v = 0; v < n; ++v) isolated |= g.degree(v) == 0;
        if (!isolated && n >= 2)
            CHECK(d.coeff(static_cast<std::size_t>(n - 1)) == n);
    }
}

TEST_CASE("family polynomials are monic of degree n with d(G,n-1) = n") {
    for (const char* text : {"path:7", "cycle:8", "star:6", "complete:5", "kpath:3:9",
                             "kstar:2:7", "kcycle:2:6", "kwheel:2:6"}) {
        const Graph g = family(text);
        const Polynomial d = domination_polynomial(g);
        const auto n = static_cast<std::size_t>(g.order());
        CHECK(d.degree() == n);
        CHECK(d.coeff(n) == 1);
        CHECK(d.coeff(n - 1) == g.order());  // connected, so every (n-1)-set dominates
        CHECK(d.min_degree() == static_cast<std::size_t>(domination_number(g)));
    }
}

TEST_CASE("restricted dominating-set counts") {
    CHECK(restricted_count_pu(family("path:2"), 0) == Polynomial::zero());
    CHECK(restricted_count_pu(family("path:3"), 0) == P({0, 1}));
    CHECK(restricted_count_pu(family("path:4"), 0) == P({0, 1, 1}));
    CHECK(restricted_count_pu(Graph(1), 0) == Polynomial::one());  // empty remainder
    CHECK_THROWS_AS(restricted_count_pu(family("path:3"), 5), InvalidVertexError);
}

TEST_CASE("disjoint-union multiplicativity") {
    testutil::SplitMix64 rng(0x12345);
    for (int i = 0; i < 30; ++i) {
        const Graph a = testutil::random_graph(rng, 1, 6);
        const Graph b = testutil::random_graph(rng, 1, 6);
        CHECK(domination_polynomial(disjoint_union(a, b)) ==
              domination_polynomial(a) * domination_polynomial(b));
    }
}

TEST_CASE("join formula holds verbatim against the oracle") {
    testutil::SplitMix64 rng(0x98765);
    for (int i = 0; i < 30; ++i) {
        const Graph a = testutil::random_graph(rng, 1, 5);
        const Graph b = testutil::random_graph(rng, 1, 5);
        CHECK(domination_polynomial(join(a, b)) ==
              d_join(domination_polynomial(a), a.order(), domination_polynomial(b), b.order()));
    }
}

TEST_CASE("general recurrence identity with oracle-resolved pieces") {
    testutil::SplitMix64 rng(0x777);
    const auto sub = [](const Graph& g) {
        return g.order() == 0 ? Polynomial::one() : domination_polynomial(g);
    };
    const Polynomial x = Polynomial::x();
    const Polynomial one_plus_x = Polynomial::one_plus_x_pow(1);
    for (int i = 0; i < 20; ++i) {
        const Graph g = testutil::random_graph(rng, 1, 8);
        const Polynomial d = domination_polynomial(g);
        for (int u = 0; u < g.order(); ++u) {
            const Polynomial rhs = x * sub(contract_vertex(g, u)) +
                                   sub(delete_vertices(g, vertex_bit(u))) +
                                   x * sub(delete_vertices(g, g.closed_neighborhood(u))) -
                                   one_plus_x * restricted_count_pu(g, u);
            CHECK(d == rhs);
        }
    }
}
