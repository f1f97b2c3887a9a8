#include "domipoly/recurrence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace domipoly {

std::string to_string(MethodTag tag) {
    switch (tag) {
        case MethodTag::oracle: return "oracle";
        case MethodTag::general_recurrence: return "general_recurrence";
        case MethodTag::degree1_recurrence: return "degree1_recurrence";
        case MethodTag::path_rec: return "path_rec";
        case MethodTag::cycle_rec: return "cycle_rec";
        case MethodTag::kpath_rec: return "kpath_rec";
        case MethodTag::kstar_closed: return "kstar_closed";
        case MethodTag::kwheel_formula: return "kwheel_formula";
        case MethodTag::join_formula: return "join_formula";
        case MethodTag::union_product: return "union_product";
        case MethodTag::corona_product: return "corona_product";
        case MethodTag::complete_closed: return "complete_closed";
        case MethodTag::star_closed: return "star_closed";
    }
    return "?";
}

MethodTag parse_method_tag(std::string_view name) {
    for (const MethodTag tag :
         {MethodTag::oracle, MethodTag::general_recurrence, MethodTag::degree1_recurrence,
          MethodTag::path_rec, MethodTag::cycle_rec, MethodTag::kpath_rec, MethodTag::kstar_closed,
          MethodTag::kwheel_formula, MethodTag::join_formula, MethodTag::union_product,
          MethodTag::corona_product, MethodTag::complete_closed, MethodTag::star_closed})
        if (to_string(tag) == name) return tag;
    throw ParseError("unknown method '" + std::string(name) + "'");
}

namespace {

// Subterm value for the recurrence identities: the 0-vertex graph counts
// its empty dominating set here, unlike the oracle's public convention.
Polynomial subterm(const Graph& g) {
    return g.order() == 0 ? Polynomial::one() : domination_polynomial(g);
}

Polynomial x_poly() { return Polynomial::x(); }
Polynomial one_plus_x() { return Polynomial::one_plus_x_pow(1); }

}  // namespace

Polynomial d_complete(int n) {
    if (n < 1) throw SpecDomainError("d_complete needs n >= 1");
    return Polynomial::one_plus_x_pow(static_cast<unsigned long>(n)) - Polynomial::one();
}

Polynomial d_star(int n) {
    if (n < 2) throw SpecDomainError("d_star needs n >= 2");
    const auto m = static_cast<unsigned long>(n - 1);
    return x_poly() * Polynomial::one_plus_x_pow(m) + Polynomial::monomial(m);
}

Polynomial d_path(int n) {
    if (n < 1) throw SpecDomainError("d_path needs n >= 1");
    std::vector<Polynomial> dp;
    dp.push_back(Polynomial({0, 1}));        // P_1
    dp.push_back(Polynomial({0, 2, 1}));     // P_2
    dp.push_back(Polynomial({0, 1, 3, 1}));  // P_3
    for (int m = 4; m <= n; ++m) {
        const auto s = dp.size();
        dp.push_back(x_poly() * (dp[s - 1] + dp[s - 2] + dp[s - 3]));
    }
    return dp[static_cast<std::size_t>(n - 1)];
}

Polynomial d_cycle(int n) {
    if (n < 3) throw SpecDomainError("d_cycle needs n >= 3");
    // Orders 1 and 2 are formal seed values for the recurrence, not graphs.
    std::vector<Polynomial> dp;
    dp.push_back(Polynomial({0, 1}));
    dp.push_back(Polynomial({0, 2, 1}));
    dp.push_back(Polynomial({0, 3, 3, 1}));  // C_3
    for (int m = 4; m <= n; ++m) {
        const auto s = dp.size();
        dp.push_back(x_poly() * (dp[s - 1] + dp[s - 2] + dp[s - 3]));
    }
    return dp[static_cast<std::size_t>(n - 1)];
}

Polynomial d_kstar(int k, int n) {
    if (k < 1 || n <= k) throw SpecDomainError("d_kstar needs n > k >= 1");
    const auto leaves = static_cast<unsigned long>(n - k);
    return Polynomial::one_plus_x_pow(leaves) *
               (Polynomial::one_plus_x_pow(static_cast<unsigned long>(k)) - Polynomial::one()) +
           Polynomial::monomial(leaves);
}

Polynomial d_kwheel(int k, int n) {
    if (k < 1 || n < k + 2) throw SpecDomainError("d_kwheel needs n >= k+2");
    const Graph cycle = generate({FamilyKind::k_cycle, k, n});
    return x_poly() * Polynomial::one_plus_x_pow(static_cast<unsigned long>(n)) +
           domination_polynomial(cycle);
}

Polynomial d_kpath_pu_closed(int k, int n) {
    if (n < k + 2 || n > 2 * k + 6)
        throw SpecDomainError("d_kpath_pu_closed covers k+2 <= n <= 2k+6");
    const auto e = [](int v) { return Polynomial::one_plus_x_pow(static_cast<unsigned long>(v)); };
    if (n <= 2 * k + 2) return x_poly() * e(n - k - 2);
    return x_poly() * (e(n - k - 2) - e(n - 2 * k - 3));
}

Polynomial d_kpath_pu(int k, int n) {
    if (n < k + 2) throw SpecDomainError("d_kpath_pu needs n >= k+2");
    // The middle closed-form branch stops counting correctly once the
    // coverage windows no longer all contain v_1, i.e. past n = 3k+3.
    if (n <= std::min(2 * k + 6, 3 * k + 3)) return d_kpath_pu_closed(k, n);
    return restricted_count_pu(generate({FamilyKind::k_path, k, n}), n - 1);
}

Polynomial d_kpath(int k, int n) {
    if (k < 1 || n < 1) throw SpecDomainError("d_kpath needs k >= 1, n >= 1");
    std::vector<Polynomial> dp(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        if (m <= k + 1) {
            dp[static_cast<std::size_t>(m)] = d_complete(m);
        } else {
            dp[static_cast<std::size_t>(m)] =
                one_plus_x() * dp[static_cast<std::size_t>(m - 1)] +
                x_poly() * dp[static_cast<std::size_t>(m - k - 1)] -
                one_plus_x() * d_kpath_pu(k, m);
        }
    }
    return dp[static_cast<std::size_t>(n)];
}

Polynomial d_join(const Polynomial& p1, int n1, const Polynomial& p2, int n2) {
    const auto e = [](int v) { return Polynomial::one_plus_x_pow(static_cast<unsigned long>(v)); };
    return (e(n1) - Polynomial::one()) * (e(n2) - Polynomial::one()) + p1 + p2;
}

Polynomial d_union(const Polynomial& p1, const Polynomial& p2) { return p1 * p2; }

Polynomial d_corona(int n, int m, const Polynomial& ph) {
    if (n < 1 || m < 1) throw SpecDomainError("d_corona needs nonempty factors");
    return pow(x_poly() * Polynomial::one_plus_x_pow(static_cast<unsigned long>(m)) + ph,
               static_cast<unsigned long>(n));
}

Polynomial d_general_recurrence(const Graph& g, int u) {
    const VertexSet nu = g.neighbors(u);  // validates u
    int pendant = -1;
    for (VertexSet m = nu; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        if (g.degree(v) == 1) {
            pendant = v;
            break;
        }
    }
    if (pendant >= 0) {
        return x_poly() * (subterm(contract_vertex(g, u)) +
                           subterm(delete_vertices(g, vertex_bit(u) | vertex_bit(pendant))) +
                           subterm(delete_vertices(g, g.closed_neighborhood(u))));
    }
    return x_poly() * subterm(contract_vertex(g, u)) + subterm(delete_vertices(g, vertex_bit(u))) +
           x_poly() * subterm(delete_vertices(g, g.closed_neighborhood(u))) -
           one_plus_x() * restricted_count_pu(g, u);
}

Polynomial d_degree1_recurrence(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) return d_general_recurrence(g, std::countr_zero(g.neighbors(v)));
    throw SpecDomainError("degree1_recurrence needs a vertex of degree 1");
}

Polynomial d_union_product(const Graph& g) {
    Polynomial acc = Polynomial::one();
    for (const VertexSet comp : connected_components(g))
        acc *= domination_polynomial(delete_vertices(g, g.vertex_set() & ~comp));
    return g.order() == 0 ? Polynomial::zero() : acc;
}

int gamma_formula(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::path:
        case FamilyKind::cycle:
        case FamilyKind::k_path:
        case FamilyKind::k_cycle: return (spec.n + 2 * spec.k) / (2 * spec.k + 1);
        case FamilyKind::star:
        case FamilyKind::k_star:
        case FamilyKind::k_wheel:
        case FamilyKind::complete: return 1;
        case FamilyKind::k_tree_script: break;
    }
    throw SpecDomainError("no domination-number formula for " + spec.to_string());
}

// ---------------------------------------------------------------------------

std::string CheckReport::to_json() const {
    std::ostringstream os;
    os << "{\"spec\":\"" << spec << "\",\"a\":\"" << method_a << "\",\"b\":\"" << method_b
       << "\",\"verdict\":\"" << (match ? "match" : "mismatch") << "\"";
    if (first_diff)
        os << ",\"first_diff\":{\"degree\":" << first_diff->degree << ",\"a\":\"" << first_diff->a
           << "\",\"b\":\"" << first_diff->b << "\"}";
    os << "}";
    return os.str();
}

CheckReport compare_polynomials(std::string spec, std::string method_a, std::string method_b,
                                const Polynomial& pa, const Polynomial& pb) {
    CheckReport report{std::move(spec), std::move(method_a), std::move(method_b), pa == pb, {}};
    if (!report.match) {
        const std::size_t top = std::max(pa.is_zero() ? 0 : pa.degree(), pb.is_zero() ? 0 : pb.degree());
        for (std::size_t d = 0; d <= top; ++d) {
            if (pa.coeff(d) != pb.coeff(d)) {
                report.first_diff =
                    FirstDiff{d, pa.coeff(d).get_str(), pb.coeff(d).get_str()};
                break;
            }
        }
    }
    return report;
}

CheckReport compare_values(std::string spec, std::string method_a, std::string method_b,
                           const BigInt& va, const BigInt& vb) {
    CheckReport report{std::move(spec), std::move(method_a), std::move(method_b), va == vb, {}};
    if (!report.match) report.first_diff = FirstDiff{0, va.get_str(), vb.get_str()};
    return report;
}

CheckReport eval_minus_one_check(const FamilySpec& spec) {
    const BigInt minus_one(-1);
    switch (spec.kind) {
        case FamilyKind::path:
        case FamilyKind::k_path:
        case FamilyKind::star:
        case FamilyKind::k_star: {
            const Graph g = generate(spec);
            const BigInt lhs = domination_polynomial(g).eval_int(minus_one);
            const BigInt rhs = independence_number(g) % 2 == 0 ? BigInt(1) : BigInt(-1);
            return compare_values(spec.to_string(), "minus_one_oracle", "minus_one_identity", lhs,
                                  rhs);
        }
        case FamilyKind::k_wheel: {
            const Graph wheel = generate(spec);
            const Graph cycle = generate({FamilyKind::k_cycle, spec.k, spec.n});
            const BigInt lhs = domination_polynomial(wheel).eval_int(minus_one);
            const BigInt rhs = domination_polynomial(cycle).eval_int(minus_one);
            return compare_values(spec.to_string(), "minus_one_oracle", "minus_one_identity", lhs,
                                  rhs);
        }
        default:
            throw SpecDomainError("no evaluation-at(-1) identity for " + spec.to_string());
    }
}

Polynomial compute_for_spec(const FamilySpec& spec, MethodTag tag) {
    spec.validate();
    const auto reject = [&]() -> Polynomial {
        throw SpecDomainError(to_string(tag) + " does not apply to " + spec.to_string());
    };
    switch (tag) {
        case MethodTag::oracle: return domination_polynomial(generate(spec));
        case MethodTag::complete_closed:
            return spec.kind == FamilyKind::complete ? d_complete(spec.n) : reject();
        case MethodTag::path_rec: return spec.kind == FamilyKind::path ? d_path(spec.n) : reject();
        case MethodTag::cycle_rec:
            return spec.kind == FamilyKind::cycle ? d_cycle(spec.n) : reject();
        case MethodTag::star_closed:
            return spec.kind == FamilyKind::star ? d_star(spec.n) : reject();
        case MethodTag::kpath_rec:
            return spec.kind == FamilyKind::k_path || spec.kind == FamilyKind::path
                       ? d_kpath(spec.k, spec.n)
                       : reject();
        case MethodTag::kstar_closed:
            return spec.kind == FamilyKind::k_star || spec.kind == FamilyKind::star
                       ? d_kstar(spec.k, spec.n)
                       : reject();
        case MethodTag::kwheel_formula:
            return spec.kind == FamilyKind::k_wheel ? d_kwheel(spec.k, spec.n) : reject();
        case MethodTag::join_formula:
            // The join-structured families: S_{k,n-k} = K_k + O_{n-k},
            // W^k_n = C^k_n + K_1. Part polynomials come from the oracle.
            if (spec.kind == FamilyKind::k_star || spec.kind == FamilyKind::star) {
                const int leaves = spec.n - spec.k;
                return d_join(domination_polynomial(generate({FamilyKind::complete, 1, spec.k})),
                              spec.k, Polynomial::monomial(static_cast<std::size_t>(leaves)),
                              leaves);
            }
            if (spec.kind == FamilyKind::k_wheel) {
                const Graph cycle = generate({FamilyKind::k_cycle, spec.k, spec.n});
                return d_join(domination_polynomial(cycle), spec.n, Polynomial({0, 1}), 1);
            }
            return reject();
        case MethodTag::general_recurrence:
            return d_general_recurrence(generate(spec), spec.order() - 1);
        case MethodTag::degree1_recurrence: return d_degree1_recurrence(generate(spec));
        case MethodTag::union_product: return d_union_product(generate(spec));
        case MethodTag::corona_product:
            return reject();  // no corona-structured family spec exists
    }
    return reject();
}

Polynomial compute_for_graph(const Graph& g, MethodTag tag, std::optional<int> vertex) {
    switch (tag) {
        case MethodTag::oracle: return domination_polynomial(g);
        case MethodTag::general_recurrence:
            return d_general_recurrence(g, vertex.value_or(g.order() - 1));
        case MethodTag::degree1_recurrence: return d_degree1_recurrence(g);
        case MethodTag::union_product: return d_union_product(g);
        default:
            throw SpecDomainError(to_string(tag) + " needs a family spec, not a raw graph");
    }
}

// ---------------------------------------------------------------------------
// Grids
// ---------------------------------------------------------------------------

namespace {

class OracleCache {
public:
    const Polynomial& of_spec(const FamilySpec& spec) {
        const std::string key = spec.to_string();
        auto it = memo_.find(key);
        if (it == memo_.end())
            it = memo_.emplace(key, domination_polynomial(generate(spec))).first;
        return it->second;
    }

private:
    std::map<std::string, Polynomial> memo_;
};

std::vector<FamilySpec> grid_instances(int kmax, int nmax) {
    std::vector<FamilySpec> specs;
    for (int n = 1; n <= nmax; ++n) specs.push_back({FamilyKind::complete, 1, n});
    for (int n = 1; n <= nmax; ++n) specs.push_back({FamilyKind::path, 1, n});
    for (int n = 3; n <= nmax; ++n) specs.push_back({FamilyKind::cycle, 1, n});
    for (int n = 2; n <= nmax; ++n) specs.push_back({FamilyKind::star, 1, n});
    for (int k = 1; k <= kmax; ++k) {
        for (int n = k; n <= nmax; ++n) specs.push_back({FamilyKind::k_path, k, n});
        for (int n = k + 1; n <= nmax; ++n) specs.push_back({FamilyKind::k_star, k, n});
        for (int n = k + 2; n <= nmax; ++n) {
            specs.push_back({FamilyKind::k_cycle, k, n});
            specs.push_back({FamilyKind::k_wheel, k, n});
        }
    }
    return specs;
}

void sort_reports(std::vector<CheckReport>& reports) {
    std::sort(reports.begin(), reports.end(), [](const CheckReport& l, const CheckReport& r) {
        return std::tie(l.spec, l.method_a, l.method_b) < std::tie(r.spec, r.method_a, r.method_b);
    });
}

}  // namespace

std::vector<CheckReport> build_polynomial_grid(int kmax, int nmax) {
    std::vector<CheckReport> reports;
    OracleCache cache;

    const auto add = [&](const FamilySpec& spec, MethodTag tag) {
        reports.push_back(compare_polynomials(spec.to_string(), to_string(tag), "oracle",
                                              compute_for_spec(spec, tag), cache.of_spec(spec)));
    };

    for (const FamilySpec& spec : grid_instances(kmax, nmax)) {
        switch (spec.kind) {
            case FamilyKind::complete: add(spec, MethodTag::complete_closed); break;
            case FamilyKind::path:
                add(spec, MethodTag::path_rec);
                if (spec.n >= 2) add(spec, MethodTag::degree1_recurrence);
                break;
            case FamilyKind::cycle: add(spec, MethodTag::cycle_rec); break;
            case FamilyKind::star:
                add(spec, MethodTag::star_closed);
                add(spec, MethodTag::join_formula);
                break;
            case FamilyKind::k_path:
                add(spec, MethodTag::kpath_rec);
                add(spec, MethodTag::general_recurrence);
                break;
            case FamilyKind::k_star:
                add(spec, MethodTag::kstar_closed);
                add(spec, MethodTag::join_formula);
                break;
            case FamilyKind::k_cycle: add(spec, MethodTag::general_recurrence); break;
            case FamilyKind::k_wheel:
                add(spec, MethodTag::kwheel_formula);
                add(spec, MethodTag::join_formula);
                break;
            case FamilyKind::k_tree_script: break;
        }
    }

    // Composite fixtures for the product formulas.
    for (int a = 1; a + 3 <= nmax; ++a) {
        const Graph g = disjoint_union(generate({FamilyKind::path, 1, a}),
                                       generate({FamilyKind::cycle, 1, 3}));
        std::ostringstream name;
        name << "union(path:" << a << ",cycle:3)";
        reports.push_back(compare_polynomials(name.str(), to_string(MethodTag::union_product),
                                              "oracle", d_union_product(g),
                                              domination_polynomial(g)));
    }
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            if (a * (1 + b) > nmax) continue;
            const Graph host = generate({FamilyKind::path, 1, a});
            const Graph copy = generate({FamilyKind::complete, 1, b});
            std::ostringstream name;
            name << "corona(path:" << a << ",complete:" << b << ")";
            reports.push_back(compare_polynomials(
                name.str(), to_string(MethodTag::corona_product), "oracle",
                d_corona(a, b, domination_polynomial(copy)),
                domination_polynomial(corona(host, copy))));
        }

    sort_reports(reports);
    return reports;
}

std::vector<CheckReport> build_value_grid(int kmax, int nmax) {
    std::vector<CheckReport> reports;
    for (const FamilySpec& spec : grid_instances(kmax, nmax)) {
        const Graph g = generate(spec);
        reports.push_back(compare_values(spec.to_string(), "gamma_formula", "gamma_oracle",
                                         BigInt(gamma_formula(spec)),
                                         BigInt(domination_number(g))));
        if (spec.kind != FamilyKind::complete)
            reports.push_back(compare_values(spec.to_string(), "alpha_formula", "alpha_brute",
                                             BigInt(alpha_formula(spec)),
                                             BigInt(independence_number(g))));
        if (spec.kind == FamilyKind::path || spec.kind == FamilyKind::k_path ||
            spec.kind == FamilyKind::star || spec.kind == FamilyKind::k_star ||
            spec.kind == FamilyKind::k_wheel)
            reports.push_back(eval_minus_one_check(spec));
    }
    sort_reports(reports);
    return reports;
}

std::vector<CheckReport> build_check_grid(int kmax, int nmax) {
    std::vector<CheckReport> reports = build_polynomial_grid(kmax, nmax);
    std::vector<CheckReport> values = build_value_grid(kmax, nmax);
    reports.insert(reports.end(), std::make_move_iterator(values.begin()),
                   std::make_move_iterator(values.end()));
    sort_reports(reports);
    return reports;
}

std::string grid_summary(const std::vector<CheckReport>& reports, int kmax, int nmax) {
    std::size_t mismatches = 0;
    for (const CheckReport& r : reports)
        if (!r.match) ++mismatches;
    std::ostringstream os;
    if (mismatches == 0)
        os << "PASS k<=" << kmax << " n<=" << nmax;
    else
        os << "FINDINGS: " << mismatches << " mismatches";
    return os.str();
}

}  // namespace domipoly
