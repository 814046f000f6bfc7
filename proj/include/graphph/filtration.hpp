#pragma once

#include <array>
#include <vector>

#include "graphph/metric.hpp"

namespace graphph {

// Simplex of dimension 0, 1 or 2. vertices holds dim+1 sorted node indices;
// unused slots are -1. A vertex enters at 0, an edge at its distance, a
// triangle at the largest of its three edge values (flag complex).
struct Simplex {
    std::array<int, 3> vertices{-1, -1, -1};
    int dim = 0;
    double value = 0.0;

    bool operator==(const Simplex&) const = default;
};

// Flag filtration sorted by (value, dim, lexicographic vertices), so every
// prefix is a simplicial complex and ties resolve deterministically.
struct Filtration {
    std::vector<Simplex> simplices;
    double threshold = 0.0;
    int max_dim = 2;
    int num_vertices = 0;
};

// All vertices at value 0, all edges with finite d(i, j) <= threshold, and
// (for max_dim = 2) all triangles whose three edges are present. Pairs at
// infinite distance never produce simplices.
Filtration build_flag_filtration(const DistanceMatrix& dm, int max_dim,
                                 double threshold);

// Evenly spaced scale values covering [0, 1]: (i - 1) / (steps - 1) for
// i = 1..steps. steps must be at least 2.
std::vector<double> threshold_grid(int steps);

struct ComplexCounts {
    long vertices = 0;
    long edges = 0;
    long triangles = 0;

    bool operator==(const ComplexCounts&) const = default;
};

// Simplex counts of the subcomplex at scale t (value <= t).
ComplexCounts complex_at(const Filtration& f, double t);

}  // namespace graphph
