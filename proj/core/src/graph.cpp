#include "quboforge/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "quboforge/errors.hpp"

namespace quboforge {

Graph Graph::from_edges(int node_count, std::vector<std::pair<int, int>> edges) {
    if (node_count < 0) throw InstanceError("negative node count");
    for (auto& [u, v] : edges) {
        if (u == v) {
            throw InstanceError("self loop at node " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
            throw InstanceError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") out of range for " + std::to_string(node_count) + " nodes");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw InstanceError("duplicate edge");
    }
    Graph g;
    g.node_count = node_count;
    g.edges = std::move(edges);
    return g;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(node_count), 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

Graph read_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());

    auto fail = [&](int line_no, const std::string& what) -> ParseError {
        return ParseError(path.string() + ":" + std::to_string(line_no) + ": " + what);
    };

    std::string line;
    int line_no = 0;
    int n = -1;
    long m = -1;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> m)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) {
                    n = -1;  // blank line before the header
                    continue;
                }
                throw fail(line_no, "expected header \"n m\"");
            }
            if (n < 0 || m < 0) throw fail(line_no, "negative count in header");
            std::string extra;
            if (ss >> extra) throw fail(line_no, "trailing tokens after header");
            continue;
        }
        int u, v;
        if (!(ss >> u)) continue;  // blank or comment-only line
        if (!(ss >> v)) throw fail(line_no, "expected edge \"u v\"");
        std::string extra;
        if (ss >> extra) throw fail(line_no, "trailing tokens after edge");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(path.string() + ": missing header \"n m\"");
    if (static_cast<long>(edges.size()) != m) {
        throw ParseError(path.string() + ": header promises " + std::to_string(m) +
                         " edges, found " + std::to_string(edges.size()));
    }
    try {
        return Graph::from_edges(n, std::move(edges));
    } catch (const InstanceError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

}  // namespace quboforge
