#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "trigspline/polyoracle.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {

/// Composite Simpson over [0, 2*pi]; panels must be even. Richardson
/// estimates come from calling it again with panels/2.
double simpson(const std::function<double(double)>& f, int panels);

/// Simpson from precomputed values at the closed uniform partition
/// (values.size() = panels + 1, values.front() and values.back() both given).
double simpson(std::span<const double> closed_values);

struct ErrorStats {
    double sup_err = 0.0;
    double l2_err = 0.0; // sqrt of the Simpson integral of the squared difference
    int points = 0;
};

ErrorStats error_stats(const std::function<double(double)>& fa,
                       const std::function<double(double)>& fb, int points);

struct ConvergenceResult {
    double order = 0.0; // minus the least-squares slope of log sup_err vs log N
    bool exact = false; // all errors at machine floor; order not meaningful
    std::vector<std::pair<int, double>> errors; // (N, sup_err)
};

struct ConvergenceOptions {
    ParamVector gamma{1.0, 1.0, 1.0};
    ParamVector eta{1.0, 1.0, 1.0};
    Indicator i1 = Indicator::I0;
    Indicator i2 = Indicator::I0;
    // 1e-12 is unreachable for low r; 30000 terms keep the truncation floor
    // orders of magnitude below the discretization error being measured.
    TailControl tail{1e-10, 30000};
    int points = 1000;
};

/// Interpolates f on each grid size in node_counts and fits the decay order
/// of the sup error. Throws DegenerateFit for fewer than 3 sizes.
ConvergenceResult convergence_order(const std::function<double(double)>& f, int r,
                                    FactorKind kind, std::span<const int> node_counts,
                                    const ConvergenceOptions& options = {});

struct SweepCell {
    ParamVector gamma;
    ParamVector eta;
    double power = 0.0;
    bool degenerate = false; // hc/hs unusable; power not computed
};

struct SweepResult {
    std::vector<SweepCell> cells;
    double baseline_power = 0.0; // cubic oracle, knot-aligned Simpson
    std::vector<SweepCell> winners; // cells strictly below the baseline
};

/// Parameter grid for sweep_power: g1 is fixed (scaling Gamma rescales the
/// series and the factors identically, so only the direction matters), g2/g3
/// range over the listed values. tie_eta sweeps H = Gamma; otherwise H ranges
/// over the same grid independently.
struct SweepGrid {
    double g1 = 1.0;
    std::vector<double> g2;
    std::vector<double> g3;
    bool tie_eta = true;

    static SweepGrid default_grid();
};

/// P(St^(0,0)(Gamma, H, kind, r), q) over the parameter grid, against the
/// cubic-oracle baseline. Winner cells are reported, never asserted: an empty
/// winner list is a legal outcome. Degenerate cells are flagged and skipped.
SweepResult sweep_power(const SampleSet& samples, int r, FactorKind kind, int q,
                        const SweepGrid& grid = SweepGrid::default_grid(),
                        const TailControl& tail = {});

struct OrthogonalityWitness {
    int k = 0;
    int j = 0;
    double integral = 0.0;
};

/// Scans fundamental-spline pairs for |integral st_k st_j| > threshold and
/// returns the strongest pair. Requires gamma == eta and a spec that is not
/// the plain trigonometric polynomial (whose tm_k ARE orthogonal). Throws
/// NoWitnessFound when every pair stays below the threshold.
OrthogonalityWitness orthogonality_witness(const SplineSpec& spec, const UniformGrid& grid,
                                           double threshold = 1e-6, int panels = 2048);

} // namespace trigspline
