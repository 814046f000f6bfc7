#pragma once

#include <iosfwd>
#include <vector>

#include "graphph/graph.hpp"

namespace graphph {

// Per-graph structural descriptor. Degenerate statistics use sentinels:
// assortativity is 0 when the degree variance over edge endpoints vanishes
// (regular graphs, empty graphs); diameter of a disconnected graph is the
// maximum finite eccentricity over its components.
struct FeatureVector {
    double density = 0.0;
    double diameter = 0.0;
    double clustering_coefficient = 0.0;
    double spectral_gap = 0.0;
    double assortativity = 0.0;
    int clique_number = 0;
    int component_count = 0;
    double motif3_open = 0.0;    // triples with exactly two edges / C(n, 3)
    double motif3_closed = 0.0;  // triangles / C(n, 3)
};

FeatureVector compute_features(const Graph& g);

// One row per graph, dataset order preserved. Per-graph work may run in
// parallel; results are gathered in order.
std::vector<FeatureVector> feature_matrix(const GraphDataset& dataset);

// CSV with header:
// graph_id,label,density,diameter,clustering,spectral_gap,assortativity,
// cliques,components,motif3_open,motif3_closed
void write_features_csv(std::ostream& out, const GraphDataset& dataset,
                        const std::vector<FeatureVector>& rows);

// Exact maximum clique size, branch and bound over a degeneracy ordering
// with a greedy-coloring bound. Exposed for direct testing.
int max_clique_size(const Graph& g);

}  // namespace graphph
