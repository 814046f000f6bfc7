#include "graphph/persistence.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <unordered_map>

#include "graphph/util.hpp"

namespace graphph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Union-find tracking each component's smallest vertex index.
class ComponentForest {
  public:
    explicit ComponentForest(int n) : parent_(n), min_vertex_(n) {
        for (int v = 0; v < n; ++v) {
            parent_[v] = v;
            min_vertex_[v] = v;
        }
    }

    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    // Merges the components of u and v; returns false if already joined.
    bool unite(int u, int v) {
        const int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent_[rv] = ru;
        min_vertex_[ru] = std::min(min_vertex_[ru], min_vertex_[rv]);
        return true;
    }

    int min_vertex(int v) { return min_vertex_[find(v)]; }

  private:
    std::vector<int> parent_;
    std::vector<int> min_vertex_;
};

struct EdgeRef {
    int u, v;
    double value;
};

std::vector<EdgeRef> sorted_edges(const Filtration& f) {
    std::vector<EdgeRef> edges;
    for (const Simplex& s : f.simplices)
        if (s.dim == 1) edges.push_back({s.vertices[0], s.vertices[1], s.value});
    return edges;  // filtration order is already (value, dim, lex)
}

// Marks edges that merge two components when processed in filtration order.
std::vector<bool> negative_edge_mask(int num_vertices, const std::vector<EdgeRef>& edges) {
    ComponentForest forest(num_vertices);
    std::vector<bool> negative(edges.size(), false);
    for (std::size_t e = 0; e < edges.size(); ++e)
        negative[e] = forest.unite(edges[e].u, edges[e].v);
    return negative;
}

void sort_points(PersistenceDiagram& pd) {
    std::sort(pd.points.begin(), pd.points.end());
}

}  // namespace

PersistenceDiagram persistence_h0(const Filtration& f) {
    PersistenceDiagram pd;
    pd.dim = 0;
    pd.cap = f.threshold;

    const auto edges = sorted_edges(f);
    ComponentForest forest(f.num_vertices);
    for (const EdgeRef& e : edges) {
        const int ru = forest.find(e.u), rv = forest.find(e.v);
        if (ru == rv) continue;
        forest.unite(e.u, e.v);
        if (e.value > 0.0) pd.points.push_back({0.0, e.value});
    }
    for (int v = 0; v < f.num_vertices; ++v)
        if (forest.find(v) == v) pd.points.push_back({0.0, kInf});

    sort_points(pd);
    return pd;
}

PersistenceDiagram persistence_h1(const Filtration& f) {
    if (f.max_dim < 2)
        throw ValidationError("persistence_h1: filtration must include triangles (max_dim = 2)");

    PersistenceDiagram pd;
    pd.dim = 1;
    pd.cap = f.threshold;

    const auto edges = sorted_edges(f);
    const auto negative = negative_edge_mask(f.num_vertices, edges);

    // Edge (u, v) -> rank in the sorted edge list.
    std::unordered_map<long long, int> edge_rank;
    edge_rank.reserve(edges.size() * 2);
    const long long n = f.num_vertices;
    for (std::size_t e = 0; e < edges.size(); ++e)
        edge_rank[edges[e].u * n + edges[e].v] = static_cast<int>(e);

    // Reduce triangle columns in filtration order. Columns are kept as
    // ascending edge-rank lists; pivot = highest rank.
    std::vector<int> pivot_owner(edges.size(), -1);
    std::vector<std::vector<int>> reduced_columns;   // indexed by owner id
    std::vector<double> owner_value;                 // triangle value per owner

    std::vector<int> column, merged;
    for (const Simplex& s : f.simplices) {
        if (s.dim != 2) continue;
        const int a = s.vertices[0], b = s.vertices[1], c = s.vertices[2];
        column = {edge_rank.at(a * n + b), edge_rank.at(a * n + c),
                  edge_rank.at(b * n + c)};
        std::sort(column.begin(), column.end());

        while (!column.empty()) {
            const int pivot = column.back();
            const int owner = pivot_owner[pivot];
            if (owner < 0) {
                pivot_owner[pivot] = static_cast<int>(reduced_columns.size());
                reduced_columns.push_back(column);
                owner_value.push_back(s.value);
                if (s.value > edges[pivot].value)
                    pd.points.push_back({edges[pivot].value, s.value});
                break;
            }
            // Z/2 column addition: symmetric difference of sorted lists.
            const auto& other = reduced_columns[owner];
            merged.clear();
            std::set_symmetric_difference(column.begin(), column.end(),
                                          other.begin(), other.end(),
                                          std::back_inserter(merged));
            column.swap(merged);
        }
    }

    // Cycle-creating edges never captured as a pivot are essential loops.
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!negative[e] && pivot_owner[e] < 0)
            pd.points.push_back({edges[e].value, kInf});

    sort_points(pd);
    return pd;
}

long betti_from_diagram(const PersistenceDiagram& pd, double t) {
    long alive = 0;
    for (const PersistencePoint& p : pd.points)
        if (p.birth <= t && t < p.death) ++alive;
    return alive;
}

void write_diagrams_csv(std::ostream& out,
                        const std::vector<std::vector<PersistenceDiagram>>& per_graph) {
    out << "graph_id,dim,birth,death\n";
    for (std::size_t g = 0; g < per_graph.size(); ++g)
        for (const PersistenceDiagram& pd : per_graph[g])
            for (const PersistencePoint& p : pd.points)
                out << g << ',' << pd.dim << ',' << format_real(p.birth) << ','
                    << format_real(p.death) << '\n';
}

}  // namespace graphph
