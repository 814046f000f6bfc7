#include "graphph/metric.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <queue>

#include "graphph/util.hpp"

namespace graphph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_finite_entry(int size, const std::vector<double>& entries) {
    double best = 0.0;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            const double d = entries[static_cast<std::size_t>(i) * size + j];
            if (std::isfinite(d)) best = std::max(best, d);
        }
    return best;
}

}  // namespace

DistanceMatrix distance_matrix_from_entries(int size, std::vector<double> entries) {
    if (static_cast<std::size_t>(size) * size != entries.size())
        throw ValidationError("distance matrix: entry count does not match size");
    DistanceMatrix dm;
    dm.size = size;
    dm.entries = std::move(entries);
    dm.max_finite = max_finite_entry(size, dm.entries);
    return dm;
}

DistanceMatrix shortest_path_matrix(const Graph& g) {
    const int n = g.num_nodes;
    DistanceMatrix dm;
    dm.size = n;
    dm.entries.assign(static_cast<std::size_t>(n) * n, kInf);
    const auto adj = g.adjacency();

    std::vector<int> hops(n);
    for (int source = 0; source < n; ++source) {
        std::fill(hops.begin(), hops.end(), -1);
        hops[source] = 0;
        std::queue<int> frontier;
        frontier.push(source);
        while (!frontier.empty()) {
            const int node = frontier.front();
            frontier.pop();
            for (int next : adj[node]) {
                if (hops[next] < 0) {
                    hops[next] = hops[node] + 1;
                    frontier.push(next);
                }
            }
        }
        for (int target = 0; target < n; ++target)
            if (hops[target] >= 0) dm.at(source, target) = hops[target];
    }
    dm.max_finite = max_finite_entry(n, dm.entries);
    return dm;
}

DistanceMatrix resistance_distance_matrix(const Graph& g) {
    const int n = g.num_nodes;
    DistanceMatrix dm;
    dm.size = n;
    dm.entries.assign(static_cast<std::size_t>(n) * n, kInf);
    for (int i = 0; i < n; ++i) dm.at(i, i) = 0.0;

    const auto adj = g.adjacency();
    const auto components = connected_components(g);
    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& members = components[c];
        const int m = static_cast<int>(members.size());
        if (m == 1) continue;

        std::vector<int> local(g.num_nodes, -1);
        for (int k = 0; k < m; ++k) local[members[k]] = k;

        Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(m, m);
        for (int k = 0; k < m; ++k) {
            for (int neighbor : adj[members[k]]) {
                const int l = local[neighbor];
                laplacian(k, k) += 1.0;
                laplacian(k, l) -= 1.0;
            }
        }

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
        if (solver.info() != Eigen::Success)
            throw ComputationError("resistance distance: eigendecomposition failed on component " +
                                   std::to_string(c));

        const Eigen::VectorXd& values = solver.eigenvalues();
        const Eigen::MatrixXd& vectors = solver.eigenvectors();
        const double cutoff = 1e-9 * std::max(values.cwiseAbs().maxCoeff(), 0.0);

        Eigen::VectorXd inverted = Eigen::VectorXd::Zero(m);
        for (int k = 0; k < m; ++k)
            if (values(k) > cutoff) inverted(k) = 1.0 / values(k);

        const Eigen::MatrixXd pinv =
            vectors * inverted.asDiagonal() * vectors.transpose();

        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                const double r = std::max(0.0, pinv(a, a) + pinv(b, b) - 2.0 * pinv(a, b));
                dm.at(members[a], members[b]) = r;
                dm.at(members[b], members[a]) = r;
            }
    }
    dm.max_finite = max_finite_entry(n, dm.entries);
    return dm;
}

DistanceMatrix normalize(const DistanceMatrix& dm) {
    if (dm.max_finite <= 0.0) return dm;
    DistanceMatrix out;
    out.size = dm.size;
    out.entries.resize(dm.entries.size());
    for (std::size_t k = 0; k < dm.entries.size(); ++k) {
        const double d = dm.entries[k];
        out.entries[k] = std::isfinite(d) ? d / dm.max_finite : d;
    }
    out.max_finite = max_finite_entry(out.size, out.entries);
    return out;
}

void write_distance_csv(std::ostream& out, const DistanceMatrix& dm) {
    for (int i = 0; i < dm.size; ++i) {
        for (int j = 0; j < dm.size; ++j) {
            if (j > 0) out << ',';
            out << format_real(dm.at(i, j));
        }
        out << '\n';
    }
}

}  // namespace graphph
