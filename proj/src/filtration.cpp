#include "graphph/filtration.hpp"

#include <algorithm>
#include <cmath>

#include "graphph/util.hpp"

namespace graphph {

namespace {

bool simplex_order(const Simplex& a, const Simplex& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
}

}  // namespace

Filtration build_flag_filtration(const DistanceMatrix& dm, int max_dim,
                                 double threshold) {
    if (max_dim != 1 && max_dim != 2)
        throw ValidationError("filtration: max_dim must be 1 or 2");
    if (!(threshold > 0.0))
        throw ValidationError("filtration: threshold must be positive");

    const int n = dm.size;
    Filtration f;
    f.threshold = threshold;
    f.max_dim = max_dim;
    f.num_vertices = n;

    for (int v = 0; v < n; ++v)
        f.simplices.push_back({{v, -1, -1}, 0, 0.0});

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = dm.at(i, j);
            if (std::isfinite(d) && d <= threshold)
                f.simplices.push_back({{i, j, -1}, 1, d});
        }

    if (max_dim == 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double dij = dm.at(i, j);
                if (!(std::isfinite(dij) && dij <= threshold)) continue;
                for (int k = j + 1; k < n; ++k) {
                    const double dik = dm.at(i, k);
                    const double djk = dm.at(j, k);
                    if (!(std::isfinite(dik) && dik <= threshold)) continue;
                    if (!(std::isfinite(djk) && djk <= threshold)) continue;
                    const double value = std::max(dij, std::max(dik, djk));
                    f.simplices.push_back({{i, j, k}, 2, value});
                }
            }
    }

    std::sort(f.simplices.begin(), f.simplices.end(), simplex_order);
    return f;
}

std::vector<double> threshold_grid(int steps) {
    if (steps < 2) throw ValidationError("threshold grid: steps must be >= 2");
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i)
        grid[i] = static_cast<double>(i) / (steps - 1);
    grid.back() = 1.0;
    return grid;
}

ComplexCounts complex_at(const Filtration& f, double t) {
    ComplexCounts counts;
    for (const Simplex& s : f.simplices) {
        if (s.value > t) break;  // sorted by value first
        if (s.dim == 0) ++counts.vertices;
        else if (s.dim == 1) ++counts.edges;
        else ++counts.triangles;
    }
    return counts;
}

}  // namespace graphph
