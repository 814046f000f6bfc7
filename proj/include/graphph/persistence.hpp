#pragma once

#include <iosfwd>
#include <vector>

#include "graphph/filtration.hpp"

namespace graphph {

struct PersistencePoint {
    double birth = 0.0;
    double death = 0.0;  // +infinity for essential classes

    bool operator==(const PersistencePoint&) const = default;
    auto operator<=>(const PersistencePoint&) const = default;
};

// Multiset of (birth, death) points for one homological dimension, kept
// sorted for deterministic serialization. cap records the filtration
// threshold the diagram was computed under; consumers that need finite
// deaths clamp against it (see vectorize.hpp).
struct PersistenceDiagram {
    int dim = 0;
    std::vector<PersistencePoint> points;
    double cap = 0.0;

    bool operator==(const PersistenceDiagram&) const = default;
};

// Connected-component persistence by union-find over the sorted edges.
// Every vertex is born at 0; each merge kills the component whose smallest
// vertex index is larger (elder rule with deterministic tie-break) at the
// edge value; surviving roots are essential. Zero-persistence points are
// dropped, which cannot occur for metrics with positive off-diagonal
// entries, so the diagram then has exactly num_vertices points.
PersistenceDiagram persistence_h0(const Filtration& f);

// Loop persistence by boundary-matrix reduction over Z/2. Only triangle
// columns are reduced: edges that merge components (negative edges) are
// identified by the union-find pass and skipped, and by the clearing
// argument positive-edge columns reduce to zero, so nothing else is
// needed. A triangle column whose reduced pivot is edge e yields the pair
// (value(e), value(triangle)); positive edges never captured as a pivot
// are essential loops. Requires max_dim = 2.
PersistenceDiagram persistence_h1(const Filtration& f);

// Number of points alive at t under half-open interval semantics:
// birth <= t < death.
long betti_from_diagram(const PersistenceDiagram& pd, double t);

// CSV rows "graph_id,dim,birth,death" with "inf" for essential deaths.
// Diagrams are grouped per graph id in the order given.
void write_diagrams_csv(std::ostream& out,
                        const std::vector<std::vector<PersistenceDiagram>>& per_graph);

}  // namespace graphph
