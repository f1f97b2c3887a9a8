#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domipoly/families.hpp"
#include "domipoly/graph.hpp"
#include "domipoly/oracle.hpp"
#include "domipoly/polynomial.hpp"

namespace domipoly {

/// One implemented computation path per tag.
enum class MethodTag {
    oracle,
    general_recurrence,
    degree1_recurrence,
    path_rec,
    cycle_rec,
    kpath_rec,
    kstar_closed,
    kwheel_formula,
    join_formula,
    union_product,
    corona_product,
    complete_closed,
    star_closed,
};

std::string to_string(MethodTag tag);
MethodTag parse_method_tag(std::string_view name);

// ---------------------------------------------------------------------------
// Closed forms and recurrences. All results are exact polynomials.
// ---------------------------------------------------------------------------

/// D(K_n) = (1+x)^n - 1, n >= 1.
Polynomial d_complete(int n);

/// Star on n vertices (hub + n-1 leaves): x(1+x)^{n-1} + x^{n-1}, n >= 2.
Polynomial d_star(int n);

/// Path / cycle recurrences unrolled iteratively from the printed bases
/// (cycle bases for orders 1 and 2 are formal seed values only).
Polynomial d_path(int n);
Polynomial d_cycle(int n);

/// D(S_{k,n-k}) = (1+x)^{n-k}((1+x)^k - 1) + x^{n-k}, n > k.
Polynomial d_kstar(int k, int n);

/// Wheel over C^k_n (order n+1): x(1+x)^n + D(C^k_n), the join-derived
/// exponent; the cycle part comes from the oracle (no closed form exists).
Polynomial d_kwheel(int k, int n);

/// k-path recurrence D = (1+x)D(P^k_{n-1}) + xD(P^k_{n-k-1}) - (1+x)p_u.
/// p_u comes from the piecewise closed form on its derivable domain
/// (n <= min(2k+6, 3k+3)) and from restricted enumeration on the generated
/// graph beyond it. Orders n <= k+1 are complete graphs.
Polynomial d_kpath(int k, int n);

/// The p_u d_kpath actually uses at order n.
Polynomial d_kpath_pu(int k, int n);

/// The piecewise closed form for p_u(P^k_n), for k+2 <= n <= 2k+6:
///   x(1+x)^{n-k-2}                          for n <= 2k+2,
///   x((1+x)^{n-k-2} - (1+x)^{n-2k-3})       for 2k+3 <= n <= 2k+6.
/// The middle branch is only a correct count while the coverage windows
/// nest (n <= 3k+3); at (k,n) in {(1,7),(1,8),(2,10)} it overcounts, which
/// the cross-check tests pin explicitly.
Polynomial d_kpath_pu_closed(int k, int n);

/// Join: ((1+x)^{n1} - 1)((1+x)^{n2} - 1) + p1 + p2.
Polynomial d_join(const Polynomial& p1, int n1, const Polynomial& p2, int n2);

/// Disjoint union: p1 * p2.
Polynomial d_union(const Polynomial& p1, const Polynomial& p2);

/// Corona with host order n and copy order m: (x(1+x)^m + pH)^n.
Polynomial d_corona(int n, int m, const Polynomial& ph);

/// One expansion step at u with oracle-resolved subterms:
///   D = x·D(G/u) + D(G-u) + x·D(G-N[u]) - (1+x)·p_u(G).
/// When u supports a degree-1 vertex v the three-term form
///   D = x·(D(G/u) + D(G-u-v) + D(G-N[u]))
/// is used instead. Empty subgraphs contribute the constant 1 (the unique
/// value under which both identities hold, e.g. at K_2).
Polynomial d_general_recurrence(const Graph& g, int u);

/// Locates a degree-1 vertex and applies the three-term form at its support.
Polynomial d_degree1_recurrence(const Graph& g);

/// Product of oracle polynomials over connected components.
Polynomial d_union_product(const Graph& g);

/// γ closed forms: ⌈n/(2k+1)⌉ for (k-)paths and (k-)cycles, 1 for wheels,
/// stars and complete graphs.
int gamma_formula(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Cross-checking
// ---------------------------------------------------------------------------

struct FirstDiff {
    std::size_t degree = 0;
    std::string a;
    std::string b;
};

/// Outcome of one two-method comparison. Scalar comparisons reuse the
/// polynomial shape with degree 0 in first_diff.
struct CheckReport {
    std::string spec;
    std::string method_a;
    std::string method_b;
    bool match = false;
    std::optional<FirstDiff> first_diff;

    std::string to_json() const;
};

CheckReport compare_polynomials(std::string spec, std::string method_a, std::string method_b,
                                const Polynomial& pa, const Polynomial& pb);
CheckReport compare_values(std::string spec, std::string method_a, std::string method_b,
                           const BigInt& va, const BigInt& vb);

/// D(G,-1) against the stated right-hand sides: (-1)^α for k-paths and
/// k-stars, D(C^k_n,-1) for k-wheels. α is brute force, D from the oracle.
CheckReport eval_minus_one_check(const FamilySpec& spec);

/// Computes D for a family instance along the given method path.
/// Throws SpecDomainError when the method does not apply to the spec.
Polynomial compute_for_spec(const FamilySpec& spec, MethodTag tag);

/// Method paths that work on arbitrary graphs.
Polynomial compute_for_graph(const Graph& g, MethodTag tag, std::optional<int> vertex = {});

/// Every applicable (method, oracle) polynomial comparison over the family
/// grid k <= kmax, n <= nmax, plus union/corona composite fixtures.
std::vector<CheckReport> build_polynomial_grid(int kmax, int nmax);

/// γ-formula, α-formula and evaluation-at(-1) comparisons over the grid.
std::vector<CheckReport> build_value_grid(int kmax, int nmax);

/// Both grids, sorted by (spec, method_a, method_b) for stable emission.
std::vector<CheckReport> build_check_grid(int kmax, int nmax);

/// "PASS k<=K n<=N" or "FINDINGS: m mismatches".
std::string grid_summary(const std::vector<CheckReport>& reports, int kmax, int nmax);

}  // namespace domipoly
