#include "graphph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "graphph/util.hpp"

namespace graphph {

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(num_nodes);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& neighbors : adj) std::sort(neighbors.begin(), neighbors.end());
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(num_nodes, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

Graph graph_from_edge_list(int num_nodes,
                           const std::vector<std::pair<int, int>>& edges,
                           std::optional<int> label) {
    if (num_nodes < 0) throw ValidationError("graph: negative node count");
    std::set<std::pair<int, int>> unique_edges;
    for (auto [u, v] : edges) {
        if (u == v)
            throw ValidationError("graph: self-loop at node " + std::to_string(u));
        if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes)
            throw ValidationError("graph: edge endpoint out of range: (" +
                                  std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
        unique_edges.emplace(u, v);
    }
    Graph g;
    g.num_nodes = num_nodes;
    g.edges.assign(unique_edges.begin(), unique_edges.end());
    g.label = label;
    return g;
}

namespace {

// Reads one integer token, tolerating surrounding whitespace and a trailing
// comma separator. Returns false on end of stream.
bool read_int_token(std::istream& in, long& out, const std::string& file,
                    std::size_t line_no) {
    std::string token;
    if (!(in >> token)) return false;
    if (!token.empty() && token.back() == ',') token.pop_back();
    if (token.empty()) return read_int_token(in, out, file, line_no);
    std::size_t consumed = 0;
    try {
        out = std::stol(token, &consumed);
    } catch (const std::exception&) {
        throw FormatError(file + ":" + std::to_string(line_no) +
                          ": non-integer token '" + token + "'");
    }
    if (consumed != token.size())
        throw FormatError(file + ":" + std::to_string(line_no) +
                          ": non-integer token '" + token + "'");
    return true;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    return in;
}

}  // namespace

GraphDataset parse_tu_dataset(const std::filesystem::path& root_dir,
                              const std::string& name) {
    const auto adjacency_path = root_dir / (name + "_A.txt");
    const auto indicator_path = root_dir / (name + "_graph_indicator.txt");
    const auto labels_path = root_dir / (name + "_graph_labels.txt");

    // Graph indicator: one 1-based graph id per node line.
    std::vector<long> indicator;
    {
        auto in = open_or_throw(indicator_path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            long graph_id = 0;
            if (!read_int_token(ls, graph_id, indicator_path.filename().string(), line_no))
                continue;  // blank line
            if (graph_id < 1)
                throw FormatError(indicator_path.filename().string() + ":" +
                                  std::to_string(line_no) + ": graph id must be >= 1");
            indicator.push_back(graph_id);
        }
    }

    long graph_count = 0;
    for (long id : indicator) graph_count = std::max(graph_count, id);

    // Per-graph local ids, assigned by order of appearance.
    std::vector<int> local_id(indicator.size());
    std::vector<int> node_counts(static_cast<std::size_t>(graph_count), 0);
    for (std::size_t node = 0; node < indicator.size(); ++node) {
        const auto g = static_cast<std::size_t>(indicator[node] - 1);
        local_id[node] = node_counts[g]++;
    }

    // Labels: one integer per graph, remapped to contiguous 0-based classes.
    std::vector<long> raw_labels;
    {
        auto in = open_or_throw(labels_path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            long value = 0;
            if (!read_int_token(ls, value, labels_path.filename().string(), line_no))
                continue;
            raw_labels.push_back(value);
        }
    }
    if (static_cast<long>(raw_labels.size()) != graph_count)
        throw FormatError(name + ": label count " + std::to_string(raw_labels.size()) +
                          " does not match graph count " + std::to_string(graph_count));

    std::map<long, int> label_map;
    for (long value : raw_labels) label_map.emplace(value, 0);
    int next_class = 0;
    for (auto& [value, mapped] : label_map) mapped = next_class++;

    // Edges: directed 1-based global pairs, deduplicated into undirected
    // local pairs per graph.
    std::vector<std::set<std::pair<int, int>>> edge_sets(
        static_cast<std::size_t>(graph_count));
    {
        auto in = open_or_throw(adjacency_path);
        std::string line;
        std::size_t line_no = 0;
        const std::string fname = adjacency_path.filename().string();
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            long a = 0, b = 0;
            if (!read_int_token(ls, a, fname, line_no)) continue;
            if (!read_int_token(ls, b, fname, line_no))
                throw FormatError(fname + ":" + std::to_string(line_no) +
                                  ": expected two node ids");
            if (a < 1 || b < 1 || a > static_cast<long>(indicator.size()) ||
                b > static_cast<long>(indicator.size()))
                throw FormatError(fname + ":" + std::to_string(line_no) +
                                  ": node id out of range");
            const long ga = indicator[static_cast<std::size_t>(a - 1)];
            const long gb = indicator[static_cast<std::size_t>(b - 1)];
            if (ga != gb)
                throw FormatError(fname + ":" + std::to_string(line_no) +
                                  ": edge endpoints belong to different graphs (" +
                                  std::to_string(ga) + " vs " + std::to_string(gb) + ")");
            if (a == b)
                throw FormatError(fname + ":" + std::to_string(line_no) + ": self-loop");
            int u = local_id[static_cast<std::size_t>(a - 1)];
            int v = local_id[static_cast<std::size_t>(b - 1)];
            if (u > v) std::swap(u, v);
            edge_sets[static_cast<std::size_t>(ga - 1)].emplace(u, v);
        }
    }

    GraphDataset dataset;
    dataset.name = name;
    dataset.class_count = next_class;
    dataset.graphs.reserve(static_cast<std::size_t>(graph_count));
    for (long g = 0; g < graph_count; ++g) {
        Graph graph;
        graph.num_nodes = node_counts[static_cast<std::size_t>(g)];
        graph.edges.assign(edge_sets[static_cast<std::size_t>(g)].begin(),
                           edge_sets[static_cast<std::size_t>(g)].end());
        graph.label = label_map.at(raw_labels[static_cast<std::size_t>(g)]);
        dataset.graphs.push_back(std::move(graph));
    }
    return dataset;
}

void write_tu_dataset(const std::filesystem::path& root_dir,
                      const GraphDataset& dataset) {
    std::filesystem::create_directories(root_dir);
    const std::string& name = dataset.name;

    std::ofstream adjacency(root_dir / (name + "_A.txt"));
    std::ofstream indicator(root_dir / (name + "_graph_indicator.txt"));
    std::ofstream labels(root_dir / (name + "_graph_labels.txt"));
    if (!adjacency || !indicator || !labels)
        throw InputError("cannot write dataset files under " + root_dir.string());

    long base = 0;  // global id of the first node of the current graph, 0-based
    for (std::size_t g = 0; g < dataset.graphs.size(); ++g) {
        const Graph& graph = dataset.graphs[g];
        for (int node = 0; node < graph.num_nodes; ++node)
            indicator << (g + 1) << "\n";
        labels << graph.label.value_or(0) << "\n";

        std::vector<std::pair<long, long>> directed;
        directed.reserve(graph.edges.size() * 2);
        for (const auto& [u, v] : graph.edges) {
            directed.emplace_back(base + u + 1, base + v + 1);
            directed.emplace_back(base + v + 1, base + u + 1);
        }
        std::sort(directed.begin(), directed.end());
        for (const auto& [a, b] : directed) adjacency << a << ", " << b << "\n";
        base += graph.num_nodes;
    }
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const auto adj = g.adjacency();
    std::vector<int> component(g.num_nodes, -1);
    std::vector<std::vector<int>> components;
    for (int start = 0; start < g.num_nodes; ++start) {
        if (component[start] >= 0) continue;
        const int id = static_cast<int>(components.size());
        components.emplace_back();
        std::queue<int> frontier;
        frontier.push(start);
        component[start] = id;
        while (!frontier.empty()) {
            const int node = frontier.front();
            frontier.pop();
            components[id].push_back(node);
            for (int next : adj[node]) {
                if (component[next] < 0) {
                    component[next] = id;
                    frontier.push(next);
                }
            }
        }
    }
    for (auto& members : components) std::sort(members.begin(), members.end());
    // BFS from increasing start nodes already yields components ordered by
    // smallest member.
    return components;
}

Graph delete_edges_random(const Graph& g, double fraction, std::uint64_t seed) {
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw ValidationError("delete_edges_random: fraction must be in [0, 1]");
    const auto edge_count = g.edges.size();
    const auto remove_count = static_cast<std::size_t>(
        std::floor(fraction * static_cast<double>(edge_count)));

    std::vector<std::pair<int, int>> shuffled = g.edges;  // already sorted: canonical order
    Rng rng(seed);
    for (std::size_t i = 0; i < remove_count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(edge_count - i));
        std::swap(shuffled[i], shuffled[j]);
    }

    Graph result;
    result.num_nodes = g.num_nodes;
    result.label = g.label;
    result.edges.assign(shuffled.begin() + static_cast<std::ptrdiff_t>(remove_count),
                        shuffled.end());
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

}  // namespace graphph
