#include "domipoly/families.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

namespace domipoly {

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::complete: return "complete";
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::star: return "star";
        case FamilyKind::k_path: return "kpath";
        case FamilyKind::k_cycle: return "kcycle";
        case FamilyKind::k_wheel: return "kwheel";
        case FamilyKind::k_star: return "kstar";
        case FamilyKind::k_tree_script: return "ktree";
    }
    return "?";
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("spec: bad " + std::string(what) + " '" + std::string(s) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

bool is_classical(FamilyKind kind) {
    return kind == FamilyKind::complete || kind == FamilyKind::path ||
           kind == FamilyKind::cycle || kind == FamilyKind::star;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.empty() || parts[0].empty()) throw ParseError("spec: empty");
    const std::string_view kind_name = parts[0];
    FamilySpec spec;
    if (kind_name == "complete") spec.kind = FamilyKind::complete;
    else if (kind_name == "path") spec.kind = FamilyKind::path;
    else if (kind_name == "cycle") spec.kind = FamilyKind::cycle;
    else if (kind_name == "star") spec.kind = FamilyKind::star;
    else if (kind_name == "kpath" || kind_name == "k_path") spec.kind = FamilyKind::k_path;
    else if (kind_name == "kcycle" || kind_name == "k_cycle") spec.kind = FamilyKind::k_cycle;
    else if (kind_name == "kwheel" || kind_name == "k_wheel") spec.kind = FamilyKind::k_wheel;
    else if (kind_name == "kstar" || kind_name == "k_star") spec.kind = FamilyKind::k_star;
    else if (kind_name == "ktree" || kind_name == "k_tree")
        throw ParseError("spec: ktree requires a script file; use ktree:<k>:<script-path>");
    else
        throw ParseError("spec: unknown family kind '" + std::string(kind_name) + "'");

    if (is_classical(spec.kind)) {
        if (parts.size() != 2) throw ParseError("spec: expected " + std::string(kind_name) + ":<n>");
        spec.k = 1;
        spec.n = parse_int(parts[1], "n");
    } else {
        if (parts.size() != 3)
            throw ParseError("spec: expected " + std::string(kind_name) + ":<k>:<n>");
        spec.k = parse_int(parts[1], "k");
        spec.n = parse_int(parts[2], "n");
    }
    spec.validate();
    return spec;
}

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    os << domipoly::to_string(kind);
    if (!is_classical(kind)) os << ":" << k;
    os << ":" << n;
    return os.str();
}

void FamilySpec::validate() const {
    const auto fail = [&](const std::string& why) { throw SpecDomainError(to_string() + ": " + why); };
    if (k < 1) fail("k must be positive");
    if (is_classical(kind) && k != 1) fail("classical families have k = 1");
    switch (kind) {
        case FamilyKind::complete:
        case FamilyKind::path:
            if (n < 1) fail("order must be at least 1");
            break;
        case FamilyKind::cycle:
            if (n < 3) fail("a cycle needs at least 3 vertices");
            break;
        case FamilyKind::star:
            if (n < 2) fail("a star needs at least 2 vertices");
            break;
        case FamilyKind::k_path:
            if (n < k) fail("a k-path needs n >= k");
            break;
        case FamilyKind::k_cycle:
            if (n < k + 2) fail("a k-cycle needs n >= k+2");
            break;
        case FamilyKind::k_wheel:
            if (n < k + 2) fail("a k-wheel needs its k-cycle well-formed (n >= k+2)");
            break;
        case FamilyKind::k_star:
            if (n <= k) fail("a k-star needs n > k");
            break;
        case FamilyKind::k_tree_script:
            if (n != k + static_cast<int>(script.size())) fail("script length inconsistent with n");
            break;
    }
    if (order() > kMaxVertices) throw CapacityError(to_string() + ": order exceeds 63");
}

int FamilySpec::order() const { return kind == FamilyKind::k_wheel ? n + 1 : n; }

namespace {

Graph make_complete(int n) {
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    const VertexSet all = full_vertex_set(n);
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = all & ~vertex_bit(v);
    return Graph::from_adjacency(std::move(adj));
}

Graph make_k_path(int k, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        for (int j = std::max(0, i - k); j < i; ++j) edges.emplace_back(j, i);
    return Graph(n, edges);
}

Graph make_k_cycle(int k, int n) {
    auto edges = make_k_path(k, n).edges();
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Graph make_k_star(int k, int n) {
    // Clique on 0..k-1, every later vertex adjacent to exactly that clique.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph make_k_tree(int k, const std::vector<std::vector<int>>& script) {
    Graph g = make_complete(k);
    for (const auto& clique : script) {
        if (static_cast<int>(clique.size()) != k)
            throw InvalidScriptError("script entry must name exactly k vertices");
        VertexSet mask = 0;
        for (int v : clique) {
            if (v < 0 || v >= g.order())
                throw InvalidScriptError("script names vertex " + std::to_string(v) +
                                         " before it exists");
            mask |= vertex_bit(v);
        }
        if (popcount(mask) != k) throw InvalidScriptError("script entry repeats a vertex");
        for (int v : clique)
            if ((g.neighbors(v) & mask & ~vertex_bit(v)) != (mask & ~vertex_bit(v)))
                throw InvalidScriptError("script attachment set is not a clique");
        std::vector<VertexSet> adj;
        adj.reserve(static_cast<std::size_t>(g.order()) + 1);
        for (int v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v));
        const int fresh = g.order();
        adj.push_back(mask);
        for (int v : clique) adj[static_cast<std::size_t>(v)] |= vertex_bit(fresh);
        g = Graph::from_adjacency(std::move(adj));
    }
    return g;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::complete: return make_complete(spec.n);
        case FamilyKind::path: return make_k_path(1, spec.n);
        case FamilyKind::cycle: return make_k_cycle(1, spec.n);
        case FamilyKind::star: return make_k_star(1, spec.n);
        case FamilyKind::k_path: return make_k_path(spec.k, spec.n);
        case FamilyKind::k_cycle: return make_k_cycle(spec.k, spec.n);
        case FamilyKind::k_wheel: return join(make_k_cycle(spec.k, spec.n), Graph(1));
        case FamilyKind::k_star: return make_k_star(spec.k, spec.n);
        case FamilyKind::k_tree_script: return make_k_tree(spec.k, spec.script);
    }
    throw SpecDomainError("unreachable family kind");
}

FamilySpec parse_k_tree_script(std::string_view text, int k) {
    if (k < 1) throw SpecDomainError("ktree: k must be positive");
    FamilySpec spec;
    spec.kind = FamilyKind::k_tree_script;
    spec.k = k;
    std::istringstream in{std::string(text)};
    std::string line;
    int expected = k;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> nums;
        int v;
        while (ls >> v) nums.push_back(v);
        if (ls.fail() && !ls.eof()) throw ParseError("script: non-numeric token in: " + line);
        if (nums.empty()) continue;
        if (static_cast<int>(nums.size()) != k + 1)
            throw ParseError("script: each line needs k+1 integers (new vertex + k-clique)");
        if (nums[0] != expected)
            throw InvalidScriptError("script: new vertices must be numbered consecutively from k");
        spec.script.emplace_back(nums.begin() + 1, nums.end());
        ++expected;
    }
    spec.n = k + static_cast<int>(spec.script.size());
    spec.validate();
    return spec;
}

FamilySpec read_k_tree_script(const std::string& path, int k) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open script file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_k_tree_script(buf.str(), k);
}

bool verify_k_tree(const Graph& g, int k) {
    if (k < 1 || g.order() < k) return false;
    Graph cur = g;
    while (cur.order() > k) {
        int candidate = -1;
        for (int v = 0; v < cur.order() && candidate < 0; ++v) {
            if (cur.degree(v) != k) continue;
            const VertexSet nb = cur.neighbors(v);
            bool clique = true;
            for (VertexSet m = nb; m && clique;) {
                const int u = std::countr_zero(m);
                m &= m - 1;
                if ((cur.neighbors(u) & nb & ~vertex_bit(u)) != (nb & ~vertex_bit(u))) clique = false;
            }
            if (clique) candidate = v;
        }
        if (candidate < 0) return false;
        cur = delete_vertices(cur, vertex_bit(candidate));
    }
    return cur.edge_count() == static_cast<std::size_t>(k) * (k - 1) / 2;
}

int alpha_formula(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::complete: return 1;
        case FamilyKind::path:
        case FamilyKind::k_path: return (spec.n + spec.k) / (spec.k + 1);
        case FamilyKind::cycle:
        case FamilyKind::k_cycle:
        case FamilyKind::k_wheel: return (spec.n + spec.k - 1) / (spec.k + 1);
        case FamilyKind::star:
        case FamilyKind::k_star: return spec.n - spec.k;
        case FamilyKind::k_tree_script: break;
    }
    throw SpecDomainError("no independence-number formula for " + spec.to_string());
}

}  // namespace domipoly
