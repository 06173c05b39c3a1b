#include "trigspline/trigpoly.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "trigspline/detail/numeric.hpp"

namespace trigspline {

using detail::NeumaierSum;
using detail::phase_mod_2pi;

SampleSet::SampleSet(UniformGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.size())
        throw GridMismatch("sample count " + std::to_string(values_.size()) +
                           " does not match grid size " + std::to_string(grid_.size()));
    for (double v : values_)
        if (!std::isfinite(v)) throw NonFinite("sample values must be finite");
}

double SampleSet::max_abs() const noexcept {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

FourierCoeffs::FourierCoeffs(UniformGrid grid, double a0, std::vector<double> a,
                             std::vector<double> b)
    : grid_(std::move(grid)), a0_(a0), a_(std::move(a)), b_(std::move(b)) {
    const auto n = static_cast<size_t>(grid_.harmonics());
    if (a_.size() != n || b_.size() != n)
        throw ValidationError("coefficient arrays must have length (N-1)/2");
}

FourierCoeffs dft_coeffs(const SampleSet& samples) {
    const UniformGrid& grid = samples.grid();
    const int big_n = grid.size();
    const int n = grid.harmonics();
    const double scale = 2.0 / big_n;

    NeumaierSum s0;
    for (double v : samples.values()) s0.add(v);
    const double a0 = scale * s0.value();

    std::vector<double> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        NeumaierSum sc, ss;
        for (int j = 0; j < big_n; ++j) {
            const double angle = phase_mod_2pi(k, grid.nodes()[static_cast<size_t>(j)]);
            const double fj = samples.values()[static_cast<size_t>(j)];
            sc.add(fj * std::cos(angle));
            ss.add(fj * std::sin(angle));
        }
        a[static_cast<size_t>(k - 1)] = scale * sc.value();
        b[static_cast<size_t>(k - 1)] = scale * ss.value();
    }
    return FourierCoeffs(grid, a0, std::move(a), std::move(b));
}

double eval_trig_poly(const FourierCoeffs& c, double t) {
    if (!std::isfinite(t)) throw NonFinite("eval_trig_poly requires finite t");
    const double tr = wrap_to_period(t);
    NeumaierSum sum;
    sum.add(c.a0() / 2.0);
    const int n = c.harmonics();
    for (int k = 1; k <= n; ++k) {
        const double angle = phase_mod_2pi(k, tr);
        sum.add(c.a()[static_cast<size_t>(k - 1)] * std::cos(angle));
        sum.add(c.b()[static_cast<size_t>(k - 1)] * std::sin(angle));
    }
    return sum.value();
}

double eval_tm(const UniformGrid& grid, int k, double t) {
    if (!std::isfinite(t)) throw NonFinite("eval_tm requires finite t");
    if (k < 1 || k > grid.size())
        throw IndexOutOfRange("tm index " + std::to_string(k) + " outside 1.." +
                              std::to_string(grid.size()));
    const double tau = t - grid.node(k);
    const double tau_r = wrap_to_period(tau);
    NeumaierSum sum;
    sum.add(1.0);
    for (int j = 1; j <= grid.harmonics(); ++j)
        sum.add(2.0 * std::cos(phase_mod_2pi(j, tau_r)));
    return sum.value() / grid.size();
}

ParsevalSides node_parseval(const SampleSet& samples) {
    const FourierCoeffs c = dft_coeffs(samples);
    NeumaierSum lhs;
    lhs.add(c.a0() * c.a0() / 2.0);
    for (int k = 0; k < c.harmonics(); ++k) {
        lhs.add(c.a()[static_cast<size_t>(k)] * c.a()[static_cast<size_t>(k)]);
        lhs.add(c.b()[static_cast<size_t>(k)] * c.b()[static_cast<size_t>(k)]);
    }
    NeumaierSum rhs;
    for (double v : samples.values()) rhs.add(v * v);
    return {lhs.value(), 2.0 / samples.grid().size() * rhs.value()};
}

} // namespace trigspline
