#include "graphph/vectorize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <tuple>

#include "graphph/util.hpp"

namespace graphph {

namespace {

void require_finite_deaths(const PersistenceDiagram& pd, const char* where) {
    for (const PersistencePoint& p : pd.points)
        if (!std::isfinite(p.death))
            throw ValidationError(std::string(where) +
                                  ": diagram has an infinite death; clamp_to_cap it first");
}

void require_increasing(const std::vector<double>& grid) {
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i - 1] < grid[i]))
            throw ValidationError("grid must be strictly increasing");
}

}  // namespace

const char* summary_kind_name(SummaryKind kind) {
    switch (kind) {
        case SummaryKind::kBetti: return "betti";
        case SummaryKind::kLandscape: return "landscape";
        case SummaryKind::kSilhouette: return "silhouette";
    }
    return "betti";
}

double StepFunction::value(double t) const {
    // Largest breakpoint <= t, right-continuous.
    const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
    if (it == breakpoints.begin()) return 0.0;
    return levels[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
}

PersistenceDiagram clamp_to_cap(const PersistenceDiagram& pd) {
    PersistenceDiagram out;
    out.dim = pd.dim;
    out.cap = pd.cap;
    out.points.reserve(pd.points.size());
    for (const PersistencePoint& p : pd.points) {
        const double death = std::min(p.death, pd.cap);
        if (death > p.birth) out.points.push_back({p.birth, death});
    }
    return out;
}

StepFunction betti_function(const PersistenceDiagram& pd, BettiWeight weight) {
    require_finite_deaths(pd, "betti_function");

    std::map<double, double> deltas;
    for (const PersistencePoint& p : pd.points) {
        if (!(p.death > p.birth)) continue;  // diagonal points contribute nothing
        const double w =
            weight == BettiWeight::kOne ? 1.0 : p.death - p.birth;
        deltas[p.birth] += w;
        deltas[p.death] -= w;
    }

    StepFunction sf;
    double level = 0.0;
    for (const auto& [t, delta] : deltas) {
        level += delta;
        if (!sf.breakpoints.empty() && sf.levels.back() == level) continue;
        sf.breakpoints.push_back(t);
        sf.levels.push_back(level);
    }
    return sf;
}

double tent(double birth, double death, double t) {
    return std::max(0.0, std::min(t - birth, death - t));
}

SummaryVector landscape(const PersistenceDiagram& pd, int k,
                        const std::vector<double>& grid) {
    if (k < 1) throw ValidationError("landscape: order k must be >= 1");
    require_increasing(grid);
    require_finite_deaths(pd, "landscape");

    SummaryVector sv;
    sv.kind = SummaryKind::kLandscape;
    sv.dim = pd.dim;
    sv.grid = grid;
    sv.param = k;
    sv.values.assign(grid.size(), 0.0);

    if (static_cast<std::size_t>(k) > pd.points.size()) return sv;

    std::vector<double> tents(pd.points.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t p = 0; p < pd.points.size(); ++p)
            tents[p] = tent(pd.points[p].birth, pd.points[p].death, grid[i]);
        std::nth_element(tents.begin(), tents.begin() + (k - 1), tents.end(),
                         std::greater<double>());
        sv.values[i] = std::max(0.0, tents[static_cast<std::size_t>(k - 1)]);
    }
    return sv;
}

SummaryVector silhouette(const PersistenceDiagram& pd, double power,
                         const std::vector<double>& grid) {
    if (!(power >= 0.0)) throw ValidationError("silhouette: power must be >= 0");
    require_increasing(grid);
    require_finite_deaths(pd, "silhouette");

    SummaryVector sv;
    sv.kind = SummaryKind::kSilhouette;
    sv.dim = pd.dim;
    sv.grid = grid;
    sv.param = power;
    sv.values.assign(grid.size(), 0.0);

    double total_weight = 0.0;
    std::vector<double> weights(pd.points.size());
    for (std::size_t p = 0; p < pd.points.size(); ++p) {
        weights[p] = std::pow(std::abs(pd.points[p].death - pd.points[p].birth), power);
        total_weight += weights[p];
    }
    if (total_weight <= 0.0) return sv;  // empty or all-diagonal diagram

    for (std::size_t i = 0; i < grid.size(); ++i) {
        double acc = 0.0;
        for (std::size_t p = 0; p < pd.points.size(); ++p)
            acc += weights[p] * tent(pd.points[p].birth, pd.points[p].death, grid[i]);
        sv.values[i] = acc / total_weight;
    }
    return sv;
}

SummaryVector evaluate_grid(const StepFunction& sf, const std::vector<double>& grid,
                            int dim) {
    require_increasing(grid);
    SummaryVector sv;
    sv.kind = SummaryKind::kBetti;
    sv.dim = dim;
    sv.grid = grid;
    sv.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) sv.values[i] = sf.value(grid[i]);
    return sv;
}

double betti_l1_distance(const StepFunction& sf1, const StepFunction& sf2) {
    std::vector<double> cuts;
    cuts.reserve(sf1.breakpoints.size() + sf2.breakpoints.size());
    cuts.insert(cuts.end(), sf1.breakpoints.begin(), sf1.breakpoints.end());
    cuts.insert(cuts.end(), sf2.breakpoints.begin(), sf2.breakpoints.end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double width = cuts[i + 1] - cuts[i];
        total += width * std::abs(sf1.value(cuts[i]) - sf2.value(cuts[i]));
    }
    // Both functions are 0 beyond the last cut (compact support).
    return total;
}

void write_summary_csv(std::ostream& out,
                       const std::vector<std::tuple<int, int, SummaryVector>>& rows) {
    if (rows.empty()) {
        out << "graph_id,label,kind,dim\n";
        return;
    }
    const auto& first = std::get<2>(rows.front());
    out << "graph_id,label,kind,dim";
    for (std::size_t i = 1; i <= first.values.size(); ++i) out << ",v_" << i;
    out << '\n';
    for (const auto& [graph_id, label, sv] : rows) {
        out << graph_id << ',' << label << ',' << summary_kind_name(sv.kind) << ','
            << sv.dim;
        for (double v : sv.values) out << ',' << format_real(v);
        out << '\n';
    }
}

}  // namespace graphph
