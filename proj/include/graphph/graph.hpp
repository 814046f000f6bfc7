#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace graphph {

// Undirected, unweighted graph. Edges are stored as (u, v) with u < v,
// sorted and unique; no self-loops. Immutable by convention once built.
struct Graph {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> edges;
    std::optional<int> label;

    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;

    bool operator==(const Graph&) const = default;
};

// Validates, deduplicates and sorts an edge list into a Graph.
// Self-loops and out-of-range endpoints raise ValidationError.
Graph graph_from_edge_list(int num_nodes,
                           const std::vector<std::pair<int, int>>& edges,
                           std::optional<int> label = std::nullopt);

struct GraphDataset {
    std::string name;
    std::vector<Graph> graphs;
    int class_count = 0;

    bool operator==(const GraphDataset&) const = default;
};

// Reads <name>_A.txt, <name>_graph_indicator.txt and <name>_graph_labels.txt
// from root_dir. Node ids are relabeled 0-based per graph, the directed edge
// pairs of _A.txt are deduplicated into undirected edges, and labels are
// remapped to contiguous 0-based classes (sorted by original value).
// Optional companion files (node/edge labels, attributes) are ignored.
GraphDataset parse_tu_dataset(const std::filesystem::path& root_dir,
                              const std::string& name);

// Inverse of parse_tu_dataset: writes the three files, listing every
// undirected edge in both directions sorted by (source, target).
void write_tu_dataset(const std::filesystem::path& root_dir,
                      const GraphDataset& dataset);

// Partition of all nodes into connected components, each sorted ascending,
// components ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Removes exactly floor(fraction * |E|) edges, chosen as the prefix of a
// seeded Fisher-Yates shuffle of the sorted edge list. Node count and label
// are preserved. fraction must lie in [0, 1].
Graph delete_edges_random(const Graph& g, double fraction, std::uint64_t seed);

}  // namespace graphph
