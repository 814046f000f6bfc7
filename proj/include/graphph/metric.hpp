#pragma once

#include <iosfwd>
#include <vector>

#include "graphph/graph.hpp"

namespace graphph {

// Symmetric pairwise node distances with zero diagonal. Entries across
// connected components are +infinity. max_finite is the largest finite
// entry (0 for a matrix with no finite off-diagonal entries).
struct DistanceMatrix {
    int size = 0;
    std::vector<double> entries;  // row-major, size * size
    double max_finite = 0.0;

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * size + j]; }
    double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * size + j]; }

    bool operator==(const DistanceMatrix&) const = default;
};

// Builds a DistanceMatrix from explicit entries, recomputing max_finite.
DistanceMatrix distance_matrix_from_entries(int size, std::vector<double> entries);

// Hop-count distances: BFS from every node over unit edge weights.
DistanceMatrix shortest_path_matrix(const Graph& g);

// Effective resistance per connected component:
//   r(i, j) = pinv(L)_ii + pinv(L)_jj - 2 pinv(L)_ij
// with the pseudoinverse taken by eigendecomposition of the component
// Laplacian, dropping eigenvalues below 1e-9 times the largest. Pairs in
// different components are +infinity.
DistanceMatrix resistance_distance_matrix(const Graph& g);

// Divides every finite entry by max_finite so the largest finite entry
// becomes 1. Infinities are preserved; an all-zero matrix is returned
// unchanged. Idempotent and monotone.
DistanceMatrix normalize(const DistanceMatrix& dm);

// Debug dump as CSV; infinities are rendered as "inf".
void write_distance_csv(std::ostream& out, const DistanceMatrix& dm);

}  // namespace graphph
