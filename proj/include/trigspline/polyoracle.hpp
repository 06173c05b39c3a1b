#pragma once

#include <vector>

#include "trigspline/factors.hpp"
#include "trigspline/trigpoly.hpp"

namespace trigspline {

/// Periodic polynomial spline on the I0 grid, degree 1 (broken line) or 3.
/// Degree 3 is the classical moment construction: the nodal second
/// derivatives M_j solve the cyclic system
///   M_{j-1} + 4 M_j + M_{j+1} = (6/h^2)(f_{j-1} - 2 f_j + f_{j+1})  (mod N).
class PeriodicPolySpline {
public:
    PeriodicPolySpline(UniformGrid grid, int degree, std::vector<double> values,
                       std::vector<double> moments);

    const UniformGrid& grid() const noexcept { return grid_; }
    int degree() const noexcept { return degree_; }
    const std::vector<double>& values() const noexcept { return values_; }
    /// Nodal second derivatives (all zero for degree 1).
    const std::vector<double>& moments() const noexcept { return moments_; }

    /// Piecewise evaluation with periodic wraparound, q <= degree. At a node
    /// the right interval is used for the discontinuous top derivative.
    double eval(double t, int q = 0) const;

private:
    UniformGrid grid_;
    int degree_;
    std::vector<double> values_;
    std::vector<double> moments_;
};

/// Piecewise-linear periodic interpolant. Samples must live on the I0 grid.
PeriodicPolySpline build_linear(const SampleSet& samples);

/// Periodic cubic spline via the cyclic 1-4-1 moment system, solved by a
/// Sherman-Morrison rank-one correction of a tridiagonal solve.
PeriodicPolySpline build_cubic_periodic(const SampleSet& samples);

double eval_poly(const PeriodicPolySpline& s, double t, int q = 0);

/// Cubic-spline moments obtained without any linear solve: the second
/// derivative of St^(0,0)(Nu1, r=3) at the nodes. Default tail budget is
/// raised to 2e6 terms because the q=2 series decays only like 1/m^2; the
/// certified bound then sits near 1e-6 relative, matching the documented
/// agreement with the cyclic-system moments.
std::vector<double> moments_via_trigspline(const SampleSet& samples,
                                           const TailControl& tail = {1e-9, 2000000});

} // namespace trigspline
