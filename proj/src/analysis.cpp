#include "trigspline/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "trigspline/detail/numeric.hpp"
#include "trigspline/power.hpp"

namespace trigspline {

using detail::kTwoPi;
using detail::NeumaierSum;

double simpson(const std::function<double(double)>& f, int panels) {
    if (panels < 2 || panels % 2 != 0)
        throw OddPanels("simpson requires an even panel count >= 2, got " + std::to_string(panels));
    std::vector<double> values(static_cast<size_t>(panels) + 1);
    for (int i = 0; i <= panels; ++i)
        values[static_cast<size_t>(i)] = f(kTwoPi * i / panels);
    return simpson(values);
}

double simpson(std::span<const double> closed_values) {
    const auto count = closed_values.size();
    if (count < 3 || count % 2 != 1)
        throw OddPanels("simpson values must cover an even panel count (odd point count >= 3)");
    const auto panels = count - 1;
    const double h = kTwoPi / static_cast<double>(panels);
    NeumaierSum sum;
    sum.add(closed_values.front());
    sum.add(closed_values.back());
    for (size_t i = 1; i < panels; ++i)
        sum.add(closed_values[i] * ((i % 2 == 1) ? 4.0 : 2.0));
    return sum.value() * h / 3.0;
}

ErrorStats error_stats(const std::function<double(double)>& fa,
                       const std::function<double(double)>& fb, int points) {
    if (points < 2) throw ValidationError("error_stats requires points >= 2");
    const int panels = points % 2 == 0 ? points : points + 1;
    std::vector<double> sq(static_cast<size_t>(panels) + 1);
    double sup = 0.0;
    for (int i = 0; i <= panels; ++i) {
        const double t = kTwoPi * i / panels;
        const double d = fa(t) - fb(t);
        sq[static_cast<size_t>(i)] = d * d;
        if (i < panels) sup = std::max(sup, std::abs(d));
    }
    return {sup, std::sqrt(std::max(0.0, simpson(sq))), points};
}

ConvergenceResult convergence_order(const std::function<double(double)>& f, int r,
                                    FactorKind kind, std::span<const int> node_counts,
                                    const ConvergenceOptions& options) {
    if (node_counts.size() < 3)
        throw DegenerateFit("convergence_order requires at least 3 grid sizes");
    for (size_t i = 1; i < node_counts.size(); ++i)
        if (node_counts[i] <= node_counts[i - 1])
            throw ValidationError("grid sizes must be strictly increasing");

    ConvergenceResult result;
    double f_scale = 0.0;
    for (int big_n : node_counts) {
        const UniformGrid grid = make_grid(big_n, options.i2);
        std::vector<double> values(grid.nodes().size());
        for (size_t i = 0; i < values.size(); ++i) values[i] = f(grid.nodes()[i]);
        const SampleSet samples(grid, std::move(values));
        f_scale = std::max(f_scale, samples.max_abs());

        SplineSpec spec;
        spec.gamma = options.gamma;
        spec.eta = options.eta;
        spec.kind = kind;
        spec.r = r;
        spec.i1 = options.i1;
        spec.i2 = options.i2;
        spec.tail = options.tail;
        const TrigSpline s = build_spline(samples, spec);

        const std::vector<double> approx = s.eval_uniform(options.points, 0);
        double sup = 0.0;
        for (int i = 0; i < options.points; ++i) {
            const double t = kTwoPi * i / options.points;
            sup = std::max(sup, std::abs(approx[static_cast<size_t>(i)] - f(t)));
        }
        result.errors.emplace_back(big_n, sup);
    }

    const double floor_err = 1e-12 * (1.0 + f_scale);
    result.exact = std::all_of(result.errors.begin(), result.errors.end(),
                               [&](const auto& e) { return e.second <= floor_err; });
    if (result.exact) {
        result.order = 0.0;
        return result;
    }

    // Least-squares slope of log(sup_err) against log(N).
    const auto m = static_cast<double>(result.errors.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [big_n, err] : result.errors) {
        mx += std::log(static_cast<double>(big_n));
        my += std::log(std::max(err, 1e-300));
    }
    mx /= m;
    my /= m;
    double sxy = 0.0, sxx = 0.0;
    for (const auto& [big_n, err] : result.errors) {
        const double dx = std::log(static_cast<double>(big_n)) - mx;
        sxy += dx * (std::log(std::max(err, 1e-300)) - my);
        sxx += dx * dx;
    }
    result.order = -sxy / sxx;
    return result;
}

SweepGrid SweepGrid::default_grid() {
    SweepGrid grid;
    grid.g2 = {-1.0, -0.5, 0.0, 0.5, 1.0, 1.5};
    grid.g3 = grid.g2;
    return grid;
}

namespace {

// Baseline P(Sp_3, q): Simpson on each spline interval separately, so the
// integrand is smooth inside every panel group (64 panels per interval).
double cubic_oracle_power(const PeriodicPolySpline& oracle, int q) {
    const int big_n = oracle.grid().size();
    const double h = oracle.grid().spacing();
    constexpr int sub = 64;
    NeumaierSum total;
    for (int j = 0; j < big_n; ++j) {
        const double t0 = oracle.grid().nodes()[static_cast<size_t>(j)];
        NeumaierSum panel;
        for (int i = 0; i <= sub; ++i) {
            // keep strictly inside the interval ends so the top derivative is
            // evaluated on the right piece
            const double t = t0 + h * i / sub;
            const double v = oracle.eval(std::min(t, t0 + h * (1.0 - 1e-12)), q);
            panel.add(v * v * ((i == 0 || i == sub) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0)));
        }
        total.add(panel.value() * (h / sub) / 3.0);
    }
    return total.value() / std::numbers::pi_v<double>;
}

} // namespace

SweepResult sweep_power(const SampleSet& samples, int r, FactorKind kind, int q,
                        const SweepGrid& grid, const TailControl& tail) {
    if (samples.grid().indicator() != Indicator::I0)
        throw GridMismatch("sweep_power expects samples on the I0 grid");
    if (q < 0 || q > r - 1) throw DerivativeOrderTooHigh("sweep_power requires q <= r-1");
    if (grid.g2.empty() || grid.g3.empty())
        throw ValidationError("sweep grid must not be empty");

    SweepResult result;
    result.baseline_power = cubic_oracle_power(build_cubic_periodic(samples), q);

    std::vector<ParamVector> etas;
    if (grid.tie_eta) {
        etas.push_back({}); // placeholder, replaced per cell
    } else {
        for (double e2 : grid.g2)
            for (double e3 : grid.g3) etas.push_back({grid.g1, e2, e3});
    }

    for (double g2 : grid.g2) {
        for (double g3 : grid.g3) {
            const ParamVector gamma{grid.g1, g2, g3};
            for (const ParamVector& eta_candidate : etas) {
                SweepCell cell;
                cell.gamma = gamma;
                cell.eta = grid.tie_eta ? gamma : eta_candidate;
                SplineSpec spec;
                spec.gamma = cell.gamma;
                spec.eta = cell.eta;
                spec.kind = kind;
                spec.r = r;
                spec.i1 = Indicator::I0;
                spec.i2 = Indicator::I0;
                spec.tail = tail;
                try {
                    const TrigSpline s = build_spline(samples, spec);
                    cell.power = power_spline_series(s, q).series_value;
                } catch (const DegenerateFactor&) {
                    cell.degenerate = true;
                } catch (const AllZeroParams&) {
                    cell.degenerate = true;
                }
                result.cells.push_back(cell);
                if (!cell.degenerate && cell.power < result.baseline_power)
                    result.winners.push_back(cell);
            }
        }
    }
    return result;
}

OrthogonalityWitness orthogonality_witness(const SplineSpec& spec, const UniformGrid& grid,
                                           double threshold, int panels) {
    if (!(spec.gamma == spec.eta))
        throw FundamentalRequiresEqualParams("orthogonality_witness requires gamma == eta");
    if (spec.gamma.g2 == 0.0 && spec.gamma.g3 == 0.0)
        throw ValidationError("orthogonality_witness: with gamma = (g1,0,0) the fundamental "
                              "functions are the orthogonal tm_k");
    if (panels < 2 || panels % 2 != 0) throw OddPanels("panels must be even");

    const int big_n = grid.size();
    std::vector<std::vector<double>> basis;
    basis.reserve(static_cast<size_t>(big_n));
    for (int k = 1; k <= big_n; ++k) {
        std::vector<double> vals = eval_fundamental_uniform(spec, grid, k, panels, 0);
        vals.push_back(vals.front());
        basis.push_back(std::move(vals));
    }

    OrthogonalityWitness best;
    double best_mag = 0.0;
    std::vector<double> product(static_cast<size_t>(panels) + 1);
    for (int k = 1; k <= big_n; ++k) {
        for (int j = k + 1; j <= big_n; ++j) {
            const auto& fk = basis[static_cast<size_t>(k - 1)];
            const auto& fj = basis[static_cast<size_t>(j - 1)];
            for (size_t i = 0; i < product.size(); ++i) product[i] = fk[i] * fj[i];
            const double integral = simpson(product);
            if (std::abs(integral) > best_mag) {
                best_mag = std::abs(integral);
                best = {k, j, integral};
            }
        }
    }
    if (best_mag <= threshold)
        throw NoWitnessFound("all fundamental-spline pairs integrate below " +
                             std::to_string(threshold));
    return best;
}

} // namespace trigspline
