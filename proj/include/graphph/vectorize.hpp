#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphph/persistence.hpp"

namespace graphph {

// Right-continuous piecewise-constant function with compact support:
// value(t) = levels[i] on [breakpoints[i], breakpoints[i+1]), 0 before the
// first breakpoint. The last level is 0 by construction.
struct StepFunction {
    std::vector<double> breakpoints;  // sorted, unique
    std::vector<double> levels;       // same length; levels.back() == 0

    double value(double t) const;

    bool operator==(const StepFunction&) const = default;
};

enum class BettiWeight { kOne, kPersistence };

enum class SummaryKind { kBetti, kLandscape, kSilhouette };

const char* summary_kind_name(SummaryKind kind);

// Fixed-length vectorization of a diagram over a strictly increasing grid.
// param carries the landscape order or silhouette power (0 for Betti).
struct SummaryVector {
    SummaryKind kind = SummaryKind::kBetti;
    int dim = 0;
    std::vector<double> grid;
    std::vector<double> values;
    double param = 0.0;
};

// Replaces infinite deaths by pd.cap. Points that become degenerate
// (death <= birth) are dropped. Every summary below requires its input to
// have gone through this single clamping point.
PersistenceDiagram clamp_to_cap(const PersistenceDiagram& pd);

// Weighted count of alive classes: sum of w(b, d) * indicator[b, d)(t).
// Diagonal points contribute nothing. Deaths must be finite.
StepFunction betti_function(const PersistenceDiagram& pd,
                            BettiWeight weight = BettiWeight::kOne);

// Tent profile of one diagram point: max(0, min(t - b, d - t)).
double tent(double birth, double death, double t);

// k-th largest tent value at each grid point; zero where fewer than k
// points exist. k >= 1.
SummaryVector landscape(const PersistenceDiagram& pd, int k,
                        const std::vector<double>& grid);

// Persistence-power weighted average of tents; the zero vector for an
// empty or all-diagonal diagram. power >= 0.
SummaryVector silhouette(const PersistenceDiagram& pd, double power,
                         const std::vector<double>& grid);

// Samples a step function at each grid point (right-continuous, so a value
// at an exact breakpoint includes the newborn class).
SummaryVector evaluate_grid(const StepFunction& sf, const std::vector<double>& grid,
                            int dim = 0);

// Exact integral of |sf1 - sf2| over the merged breakpoint partition.
double betti_l1_distance(const StepFunction& sf1, const StepFunction& sf2);

// Long-format CSV: graph_id,label,kind,dim,v_1..v_d (one row per summary).
void write_summary_csv(std::ostream& out,
                       const std::vector<std::tuple<int, int, SummaryVector>>& rows);

}  // namespace graphph
