#include "domipoly/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace domipoly {

namespace {

// Strips comments and yields the remaining whitespace-separated tokens.
std::vector<long long> read_numbers(std::istream& in) {
    std::vector<long long> out;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long v;
        while (ls >> v) out.push_back(v);
        if (ls.fail() && !ls.eof()) throw ParseError("graph file: non-numeric token in: " + line);
    }
    return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
    const auto nums = read_numbers(in);
    if (nums.empty()) throw ParseError("graph file: missing order line");
    const long long n = nums[0];
    if (n < 0 || n > kMaxVertices) throw CapacityError("graph file: order outside [0, 63]");
    if ((nums.size() - 1) % 2 != 0) throw ParseError("graph file: dangling edge endpoint");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i + 1 < nums.size(); i += 2) {
        const long long u = nums[i], v = nums[i + 1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidVertexError("graph file: edge endpoint out of range");
        if (u == v) throw InvalidVertexError("graph file: self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

}  // namespace domipoly
