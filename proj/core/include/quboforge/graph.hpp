#pragma once

#include <filesystem>
#include <utility>
#include <vector>

namespace quboforge {

/// Simple undirected graph on nodes 0..n-1. Edges are stored as (u, v)
/// with u < v, sorted and unique; self loops and duplicates are rejected.
struct Graph {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;

    static Graph from_edges(int node_count, std::vector<std::pair<int, int>> edges);

    std::vector<int> degrees() const;
    std::size_t edge_count() const { return edges.size(); }
};

/// File format: UTF-8 text, '#' starts a comment line, first data line is
/// "n m", then m lines "u v".
Graph read_graph(const std::filesystem::path& path);

}  // namespace quboforge
