#include "trigspline/power.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trigspline/analysis.hpp"
#include "trigspline/detail/numeric.hpp"

namespace trigspline {

using detail::ipow;
using detail::NeumaierSum;

double power_trigpoly(const FourierCoeffs& c, int q) {
    if (q < 0) throw ValidationError("derivative order must be nonnegative");
    NeumaierSum sum;
    if (q == 0) sum.add(c.a0() * c.a0() / 2.0);
    for (int k = 1; k <= c.harmonics(); ++k) {
        const size_t i = static_cast<size_t>(k - 1);
        const double w = ipow(static_cast<double>(k), 2L * q);
        sum.add(w * (c.a()[i] * c.a()[i] + c.b()[i] * c.b()[i]));
    }
    return sum.value();
}

namespace {

// Squared-amplitude alias sum for one harmonic:
//   (g1 nu_k k^q)^2 + sum_m [(g2 nu_{mN+k} (mN+k)^q)^2 + (g3 nu_{mN-k} (mN-k)^q)^2].
// The truncation rule is independent of the data coefficients, so the
// property-14 power equalities survive truncation exactly.
double squared_alias_sum(const ParamVector& g, FactorKind kind, int k, int r, int N, int q,
                         const TailControl& tail) {
    NeumaierSum sum;
    const double nu_k = nu(kind, k, r, N);
    const double kq = ipow(static_cast<double>(k), q);
    sum.add(g.g1 * nu_k * kq * (g.g1 * nu_k * kq));

    const double alias = g.max_abs_alias();
    if (alias > 0.0) {
        // The squared series decays with exponent 2(1+r-q); bound its tail by
        // the plain series bound at order (1+r-q) times its leading magnitude.
        const double anchor = g.max_abs() * g.max_abs() * nu_k * nu_k * kq * kq;
        const AliasNuSeries nus(kind, k, r, N);
        const double b = alias_decay_constant(kind, r, N);
        for (long m = 1; m <= tail.max_terms; ++m) {
            const double vp = g.g2 * nus.plus(m) * (q == 0 ? 1.0 : ipow(static_cast<double>(m) * N + k, q));
            const double vm = g.g3 * nus.minus(m) * (q == 0 ? 1.0 : ipow(static_cast<double>(m) * N - k, q));
            sum.add(vp * vp + vm * vm);
            const double edge = static_cast<double>(N) * m - k;
            const double head = alias * b * ipow(1.0 / edge, 1 + r - q);
            const double bound = head * alias * alias_tail_bound(kind, r, N, k, q, m);
            if (bound <= tail.rel_tol * std::max(anchor, std::abs(sum.value()))) break;
        }
    }
    return sum.value();
}

} // namespace

PowerReport power_spline_series(const TrigSpline& s, int q, int quadrature_panels) {
    if (q < 0) throw ValidationError("derivative order must be nonnegative");
    if (q > s.spec().r - 1)
        throw DerivativeOrderTooHigh("power_spline_series requires q <= r-1");
    if (quadrature_panels < 4 || quadrature_panels % 2 != 0)
        throw OddPanels("quadrature_panels must be even and at least 4");

    const SplineSpec& spec = s.spec();
    const int big_n = s.grid_size();
    const FourierCoeffs& c = s.coeffs();

    PowerReport report;
    report.q = q;
    report.a0_term = q == 0 ? c.a0() * c.a0() / 2.0 : 0.0;

    NeumaierSum pc_sum, ps_sum;
    for (int k = 1; k <= s.harmonics(); ++k) {
        const size_t i = static_cast<size_t>(k - 1);
        const double ra = c.a()[i] / s.hc()[i];
        const double rb = c.b()[i] / s.hs()[i];
        if (ra != 0.0)
            pc_sum.add(ra * ra * squared_alias_sum(spec.gamma, spec.kind, k, spec.r, big_n, q, spec.tail));
        if (rb != 0.0)
            ps_sum.add(rb * rb * squared_alias_sum(spec.eta, spec.kind, k, spec.r, big_n, q, spec.tail));
    }
    report.pc = pc_sum.value();
    report.ps = ps_sum.value();
    report.series_value = report.a0_term + report.pc + report.ps;

    // Quadrature route: (1/pi) integral of the evaluated derivative squared,
    // composite Simpson, with a Richardson check against half the panels.
    std::vector<double> vals = s.eval_uniform(quadrature_panels, q);
    vals.push_back(vals.front());
    std::vector<double> sq(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) sq[i] = vals[i] * vals[i];
    const double full = simpson(sq) / std::numbers::pi_v<double>;
    std::vector<double> sq_half;
    sq_half.reserve(sq.size() / 2 + 1);
    for (size_t i = 0; i < sq.size(); i += 2) sq_half.push_back(sq[i]);
    const double half = simpson(sq_half) / std::numbers::pi_v<double>;
    report.quadrature_value = full;
    report.richardson_delta = std::abs(full - half);
    return report;
}

double half_norm(const FourierCoeffs& c, int n) {
    return std::sqrt(std::numbers::pi_v<double> * power_trigpoly(c, n));
}

double half_norm(const TrigSpline& s, int n) {
    if (n > s.spec().r - 1)
        throw DerivativeOrderTooHigh("half_norm requires n <= r-1 for splines");
    PowerReport report = power_spline_series(s, n);
    return std::sqrt(std::numbers::pi_v<double> * report.series_value);
}

} // namespace trigspline
