#include "graphph/features.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <queue>

#include "graphph/util.hpp"

namespace graphph {

namespace {

// Smallest-last (degeneracy) vertex ordering.
std::vector<int> degeneracy_order(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> degree(n), order;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || degree[v] < degree[best])) best = v;
        removed[best] = true;
        order.push_back(best);
        for (int u : adj[best])
            if (!removed[u]) --degree[u];
    }
    return order;
}

class MaxCliqueSearch {
  public:
    explicit MaxCliqueSearch(const Graph& g)
        : n_(g.num_nodes), adjacent_(static_cast<std::size_t>(n_) * n_, false) {
        for (const auto& [u, v] : g.edges) {
            adjacent_[static_cast<std::size_t>(u) * n_ + v] = true;
            adjacent_[static_cast<std::size_t>(v) * n_ + u] = true;
        }
    }

    int run(const std::vector<std::vector<int>>& adj) {
        if (n_ == 0) return 0;
        best_ = 1;
        const auto order = degeneracy_order(adj);
        std::vector<int> position(n_);
        for (int i = 0; i < n_; ++i) position[order[i]] = i;
        for (int i = 0; i < n_; ++i) {
            const int v = order[i];
            std::vector<int> candidates;
            for (int u : adj[v])
                if (position[u] > i) candidates.push_back(u);
            expand(1, candidates);
        }
        return best_;
    }

  private:
    bool edge(int u, int v) const {
        return adjacent_[static_cast<std::size_t>(u) * n_ + v];
    }

    // Greedy coloring bound: vertices of P reordered by color class, so that
    // clique_size + color is an upper bound for any clique extending through
    // that vertex.
    void color_sort(const std::vector<int>& pool, std::vector<int>& ordered,
                    std::vector<int>& bounds) const {
        std::vector<std::vector<int>> classes;
        for (int v : pool) {
            std::size_t k = 0;
            for (; k < classes.size(); ++k) {
                bool conflict = false;
                for (int u : classes[k])
                    if (edge(u, v)) { conflict = true; break; }
                if (!conflict) break;
            }
            if (k == classes.size()) classes.emplace_back();
            classes[k].push_back(v);
        }
        ordered.clear();
        bounds.clear();
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (int v : classes[k]) {
                ordered.push_back(v);
                bounds.push_back(static_cast<int>(k) + 1);
            }
    }

    void expand(int clique_size, const std::vector<int>& pool) {
        if (pool.empty()) {
            best_ = std::max(best_, clique_size);
            return;
        }
        std::vector<int> ordered, bounds;
        color_sort(pool, ordered, bounds);
        for (int i = static_cast<int>(ordered.size()) - 1; i >= 0; --i) {
            if (clique_size + bounds[i] <= best_) return;
            const int v = ordered[i];
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (edge(ordered[j], v)) next.push_back(ordered[j]);
            expand(clique_size + 1, next);
        }
    }

    int n_;
    std::vector<bool> adjacent_;
    int best_ = 0;
};

}  // namespace

int max_clique_size(const Graph& g) {
    MaxCliqueSearch search(g);
    return search.run(g.adjacency());
}

FeatureVector compute_features(const Graph& g) {
    FeatureVector f;
    const int n = g.num_nodes;
    const auto m = static_cast<double>(g.edges.size());
    const auto adj = g.adjacency();
    const auto deg = g.degrees();

    f.density = n >= 2 ? 2.0 * m / (static_cast<double>(n) * (n - 1)) : 0.0;

    // Longest shortest path, taken over components (finite distances only).
    {
        std::vector<int> hops(n);
        double diameter = 0.0;
        for (int source = 0; source < n; ++source) {
            std::fill(hops.begin(), hops.end(), -1);
            hops[source] = 0;
            std::queue<int> frontier;
            frontier.push(source);
            while (!frontier.empty()) {
                const int node = frontier.front();
                frontier.pop();
                for (int next : adj[node])
                    if (hops[next] < 0) {
                        hops[next] = hops[node] + 1;
                        frontier.push(next);
                    }
            }
            for (int target = 0; target < n; ++target)
                diameter = std::max(diameter, static_cast<double>(hops[target]));
        }
        f.diameter = diameter;
    }

    // Triangles once each (u < v < w) and average local clustering.
    long long triangles = 0;
    {
        double clustering_sum = 0.0;
        for (int v = 0; v < n; ++v) {
            const auto& neighbors = adj[v];
            const int d = static_cast<int>(neighbors.size());
            if (d < 2) continue;
            long long links = 0;
            for (std::size_t a = 0; a < neighbors.size(); ++a)
                for (std::size_t b = a + 1; b < neighbors.size(); ++b)
                    if (std::binary_search(adj[neighbors[a]].begin(), adj[neighbors[a]].end(),
                                           neighbors[b]))
                        ++links;
            clustering_sum += 2.0 * static_cast<double>(links) /
                              (static_cast<double>(d) * (d - 1));
            triangles += links;  // each triangle counted once per corner
        }
        triangles /= 3;
        f.clustering_coefficient = n > 0 ? clustering_sum / n : 0.0;
    }

    // Adjacency spectrum: gap between the two largest eigenvalues.
    if (n >= 2) {
        Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
        for (const auto& [u, v] : g.edges) {
            adjacency(u, v) = 1.0;
            adjacency(v, u) = 1.0;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency);
        if (solver.info() != Eigen::Success)
            throw ComputationError("spectral gap: eigendecomposition failed");
        const auto& values = solver.eigenvalues();  // ascending
        f.spectral_gap = values(n - 1) - values(n - 2);
    }

    // Degree Pearson correlation over edges; sentinel 0 when the degree
    // variance vanishes (regular graphs) or there are no edges.
    if (!g.edges.empty()) {
        double s_prod = 0.0, s_half = 0.0, s_sq = 0.0;
        for (const auto& [u, v] : g.edges) {
            const double j = deg[u], k = deg[v];
            s_prod += j * k;
            s_half += 0.5 * (j + k);
            s_sq += 0.5 * (j * j + k * k);
        }
        const double mean = s_half / m;
        const double variance = s_sq / m - mean * mean;
        if (variance > 1e-12)
            f.assortativity = (s_prod / m - mean * mean) / variance;
    }

    f.clique_number = max_clique_size(g);
    f.component_count = static_cast<int>(connected_components(g).size());

    // Three-node motifs: open = triples spanning exactly two edges,
    // closed = triangles; both divided by C(n, 3).
    if (n >= 3) {
        long long cherries = 0;
        for (int v = 0; v < n; ++v)
            cherries += static_cast<long long>(deg[v]) * (deg[v] - 1) / 2;
        const long long open_paths = cherries - 3 * triangles;
        const double triples = static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
        f.motif3_open = static_cast<double>(open_paths) / triples;
        f.motif3_closed = static_cast<double>(triangles) / triples;
    }

    return f;
}

std::vector<FeatureVector> feature_matrix(const GraphDataset& dataset) {
    std::vector<FeatureVector> rows(dataset.graphs.size());
    parallel_for(dataset.graphs.size(),
                 [&](std::size_t i) { rows[i] = compute_features(dataset.graphs[i]); });
    return rows;
}

void write_features_csv(std::ostream& out, const GraphDataset& dataset,
                        const std::vector<FeatureVector>& rows) {
    out << "graph_id,label,density,diameter,clustering,spectral_gap,assortativity,"
           "cliques,components,motif3_open,motif3_closed\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const FeatureVector& f = rows[i];
        out << i << ',' << dataset.graphs[i].label.value_or(-1) << ','
            << format_real(f.density) << ',' << format_real(f.diameter) << ','
            << format_real(f.clustering_coefficient) << ',' << format_real(f.spectral_gap)
            << ',' << format_real(f.assortativity) << ',' << f.clique_number << ','
            << f.component_count << ',' << format_real(f.motif3_open) << ','
            << format_real(f.motif3_closed) << '\n';
    }
}

}  // namespace graphph
