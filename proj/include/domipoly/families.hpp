#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "domipoly/graph.hpp"

namespace domipoly {

enum class FamilyKind {
    complete,
    path,
    cycle,
    star,
    k_path,
    k_cycle,
    k_wheel,
    k_star,
    k_tree_script,
};

std::string to_string(FamilyKind kind);

/// Parametric description of a named family instance.
///
/// Parameter domains: k_path needs n >= k; k_cycle needs n >= k+2; k_wheel
/// wraps a well-formed k_cycle (the generated wheel has n+1 vertices, hub
/// last); k_star needs n > k. The classical kinds fix k = 1.
struct FamilySpec {
    FamilyKind kind = FamilyKind::complete;
    int k = 1;
    int n = 0;
    /// k_tree_script only: per added vertex, the k-clique it attaches to.
    /// Vertex k+i is created by entry i; the base is K_k on 0..k-1.
    std::vector<std::vector<int>> script;

    FamilySpec() = default;
    FamilySpec(FamilyKind family_kind, int clique_size, int order_param)
        : kind(family_kind), k(clique_size), n(order_param) {}

    /// Parses "kpath:3:7", "path:5", "kstar:2:4", ... (no script I/O here).
    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
    /// Throws SpecDomainError when the parameters are outside the domain.
    void validate() const;
    /// Order of the generated graph (n+1 for k_wheel, n otherwise).
    int order() const;
};

/// Builds the graph in definition order: presentation order for k-paths,
/// clique-then-independent-set for k-stars, hub appended last for wheels.
Graph generate(const FamilySpec& spec);

/// Reads a k-tree attachment script: one line per added vertex,
/// `new_vertex c1 ... ck`, new vertices ascending from k.
FamilySpec read_k_tree_script(const std::string& path, int k);
FamilySpec parse_k_tree_script(std::string_view text, int k);

/// True iff g is a k-tree: strip simplicial degree-k vertices down to K_k.
bool verify_k_tree(const Graph& g, int k);

/// Closed-form independence numbers for the four k-families.
int alpha_formula(const FamilySpec& spec);

}  // namespace domipoly
