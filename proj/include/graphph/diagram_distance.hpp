#pragma once

#include <iosfwd>
#include <vector>

#include "graphph/persistence.hpp"

namespace graphph {

// One matched pair of an optimal bijection between diagonal-augmented
// diagrams. Indices refer to points of the respective diagram; kDiagonal
// marks the L-infinity projection (b+d)/2 of the mate.
struct MatchPair {
    static constexpr int kDiagonal = -1;
    int from = kDiagonal;
    int to = kDiagonal;
};

struct Matching {
    std::vector<MatchPair> pairs;
    double cost = 0.0;
    double q = 1.0;  // +infinity marks the bottleneck matching
};

struct DiagramDistance {
    double distance = 0.0;
    Matching matching;
};

// L-infinity ground distance between diagram points.
double linf_distance(const PersistencePoint& a, const PersistencePoint& b);

// L-infinity distance of a point to the diagonal: (d - b) / 2.
double diagonal_gap(const PersistencePoint& p);

// q-Wasserstein distance (q >= 1) by exact assignment on the
// (n1+n2) x (n1+n2) augmented cost matrix with entries raised to the q-th
// power. Requires equal dims and finite deaths.
DiagramDistance wasserstein(const PersistenceDiagram& pd1,
                            const PersistenceDiagram& pd2, double q);

// Bottleneck distance: binary search over the candidate cost set with
// bipartite feasibility via Hopcroft-Karp. Exact (the answer is always one
// of the candidate values).
DiagramDistance bottleneck(const PersistenceDiagram& pd1,
                           const PersistenceDiagram& pd2);

// Exhaustive minimum over all augmented bijections; requires
// |pd1| + |pd2| <= 8. Test oracle for wasserstein.
double brute_force_wasserstein(const PersistenceDiagram& pd1,
                               const PersistenceDiagram& pd2, double q);

// Same enumeration with sup-cost; oracle for bottleneck.
double brute_force_bottleneck(const PersistenceDiagram& pd1,
                              const PersistenceDiagram& pd2);

enum class DiagramMetric { kW1, kW2, kBottleneck };

// Symmetric zero-diagonal matrix of pairwise distances; the upper triangle
// is computed in parallel. All diagrams must share dim and be clamped.
std::vector<std::vector<double>> pairwise_distance_matrix(
    const std::vector<PersistenceDiagram>& diagrams, DiagramMetric metric);

// CSV with a header row of diagram ids.
void write_matrix_csv(std::ostream& out,
                      const std::vector<std::vector<double>>& matrix);

}  // namespace graphph
