#pragma once

#include <span>
#include <vector>

#include "trigspline/factors.hpp"
#include "trigspline/trigpoly.hpp"

namespace trigspline {

/// What to do when the certified tail bound cannot reach tail.rel_tol within
/// tail.max_terms: report the coarser achieved tolerance (default) or throw
/// TailBudgetExceeded.
enum class TailPolicy { Relaxed, Strict };

/// Full parameterization of a trigonometric interpolation spline
/// St^(I1,I2)(Gamma, H, nu, r, t). i1 selects the stitching grid (alias sign
/// pattern), i2 the interpolation grid the coefficients come from.
struct SplineSpec {
    ParamVector gamma;
    ParamVector eta;
    FactorKind kind = FactorKind::Nu1;
    int r = 1;
    Indicator i1 = Indicator::I0;
    Indicator i2 = Indicator::I0;
    TailControl tail;
};

/// Throws ValidationError (r < 1) or AllZeroParams.
void validate(const SplineSpec& spec);

/// Truncation certificate for one derivative order: an analytic remainder
/// bound for everything dropped from the alias series, the magnitude scale it
/// is measured against, and whether the requested tolerance was met.
struct TailCertificate {
    int q = 0;
    double abs_bound = 0.0;
    double scale = 0.0;
    double achieved_rel_tol = 0.0;
    long max_alias_terms = 0;
    bool certified = false;
};

/// A built spline: DFT coefficients on grid I2 plus the precomputed
/// interpolation factors hc_k, hs_k. Immutable; evaluation is pure.
class TrigSpline {
public:
    TrigSpline(SplineSpec spec, FourierCoeffs coeffs,
               std::vector<FactorValue> hc, std::vector<FactorValue> hs);

    const SplineSpec& spec() const noexcept { return spec_; }
    const FourierCoeffs& coeffs() const noexcept { return coeffs_; }
    int grid_size() const noexcept { return coeffs_.grid().size(); }
    int harmonics() const noexcept { return coeffs_.harmonics(); }

    /// hc_k / hs_k for k = 1..n (0-based storage).
    const std::vector<double>& hc() const noexcept { return hc_; }
    const std::vector<double>& hs() const noexcept { return hs_; }

    /// Worst truncation tolerance achieved across all hc_k / hs_k sums.
    double factor_achieved_rel_tol() const noexcept { return factor_achieved_; }

    /// Value of the q-th derivative at t, q <= r-1.
    double eval(double t, int q = 0, TailPolicy policy = TailPolicy::Relaxed) const;

    /// Values at the uniform points t_i = offset + 2*pi*i/points, i = 0..points-1.
    /// Identical results to pointwise eval; much faster for dense output.
    std::vector<double> eval_uniform(int points, int q = 0, double offset = 0.0,
                                     TailPolicy policy = TailPolicy::Relaxed) const;

    /// Order-r derivative. The series loses its uniform-convergence guarantee
    /// at q = r, so this is a separate, explicitly unsafe entry point; the
    /// alias sums are simply capped at tail.max_terms.
    double eval_order_r_unsafe(double t) const;

    /// Remainder analysis for derivative order q (independent of t).
    TailCertificate tail_certificate(int q = 0) const;

private:
    struct HarmonicPlan;
    std::vector<HarmonicPlan> plan(int q) const;
    double eval_at(const std::vector<HarmonicPlan>& plans, double t, int q) const;
    void check_q(int q) const;

    SplineSpec spec_;
    FourierCoeffs coeffs_;
    std::vector<double> hc_, hs_;
    std::vector<long> hc_terms_, hs_terms_; // adaptive alias stops per harmonic
    double factor_achieved_ = 0.0;
};

/// Builds the spline for samples on grid I2: coefficients by dft_coeffs, then
/// hc_k/hs_k for k = 1..n. Throws GridMismatch when the sample grid indicator
/// differs from spec.i2; propagates DegenerateFactor.
TrigSpline build_spline(const SampleSet& samples, const SplineSpec& spec);

/// Fundamental spline st_k (cardinal basis at node k of grid I2), evaluated
/// via its own series, not via build_spline. Requires gamma == eta.
double eval_fundamental(const SplineSpec& spec, const UniformGrid& grid, int k,
                        double t, int q = 0);

/// st_k at the uniform points 2*pi*i/points.
std::vector<double> eval_fundamental_uniform(const SplineSpec& spec, const UniformGrid& grid,
                                             int k, int points, int q = 0);

/// sum_k f_k st_k(t); agrees with eval(build_spline(...)) within twice the
/// tail tolerance.
double reconstruct_from_fundamentals(std::span<const double> values, const SplineSpec& spec,
                                     const UniformGrid& grid, double t, int q = 0);

} // namespace trigspline
