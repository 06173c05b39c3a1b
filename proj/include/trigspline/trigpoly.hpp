#pragma once

#include <vector>

#include "trigspline/grid.hpp"

namespace trigspline {

/// Function samples f_i = f(t_i) on a uniform grid.
class SampleSet {
public:
    SampleSet(UniformGrid grid, std::vector<double> values);

    const UniformGrid& grid() const noexcept { return grid_; }
    const std::vector<double>& values() const noexcept { return values_; }
    double max_abs() const noexcept;

private:
    UniformGrid grid_;
    std::vector<double> values_;
};

/// Coefficients of the interpolation trigonometric polynomial
///   T_n(t) = a0/2 + sum_{k=1..n} a_k cos(kt) + b_k sin(kt).
/// a0 is stored with the same 2/N factor as the other coefficients; the
/// polynomial applies the /2.
class FourierCoeffs {
public:
    FourierCoeffs(UniformGrid grid, double a0, std::vector<double> a, std::vector<double> b);

    const UniformGrid& grid() const noexcept { return grid_; }
    double a0() const noexcept { return a0_; }
    const std::vector<double>& a() const noexcept { return a_; }
    const std::vector<double>& b() const noexcept { return b_; }
    int harmonics() const noexcept { return static_cast<int>(a_.size()); }

private:
    UniformGrid grid_;
    double a0_;
    std::vector<double> a_, b_;
};

/// Coefficients by the plain O(N^2) sums
///   a_k = (2/N) sum_j f_j cos(k t_j),  b_k = (2/N) sum_j f_j sin(k t_j).
FourierCoeffs dft_coeffs(const SampleSet& samples);

double eval_trig_poly(const FourierCoeffs& c, double t);

/// Fundamental trigonometric function of node k (1-based):
///   tm_k(t) = (1/N) [1 + 2 sum_{j=1..n} cos(j (t - t_k))],
/// equal to 1 at t_k and 0 at the other nodes.
double eval_tm(const UniformGrid& grid, int k, double t);

struct ParsevalSides {
    double lhs; // a0^2/2 + sum (a_k^2 + b_k^2)
    double rhs; // (2/N) sum f_j^2
};

ParsevalSides node_parseval(const SampleSet& samples);

} // namespace trigspline
