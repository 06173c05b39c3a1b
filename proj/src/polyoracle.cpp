#include "trigspline/polyoracle.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "trigspline/detail/numeric.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {

namespace {

// Cyclic tridiagonal solve for the 1-4-1 moment matrix via Sherman-Morrison:
// peel the corner entries off as a rank-one update of a plain tridiagonal
// system and correct the Thomas solution. The 1-4-1 matrix is strictly
// diagonally dominant, so the pivots cannot vanish.
std::vector<double> solve_cyclic_141(const std::vector<double>& rhs) {
    const size_t n = rhs.size();
    constexpr double alpha = 1.0;  // top-right corner
    constexpr double beta = 1.0;   // bottom-left corner
    constexpr double gamma = -4.0; // free parameter of the rank-one split

    std::vector<double> diag(n, 4.0);
    diag[0] = 4.0 - gamma;
    diag[n - 1] = 4.0 - alpha * beta / gamma;

    const auto thomas = [&](const std::vector<double>& d) {
        std::vector<double> x(d), c_prime(n, 0.0);
        double piv = diag[0];
        if (std::abs(piv) < 1e-14) throw SingularSystem("cyclic 1-4-1 pivot vanished");
        x[0] /= piv;
        for (size_t i = 1; i < n; ++i) {
            c_prime[i - 1] = 1.0 / piv;
            piv = diag[i] - c_prime[i - 1];
            if (std::abs(piv) < 1e-14) throw SingularSystem("cyclic 1-4-1 pivot vanished");
            x[i] = (x[i] - x[i - 1]) / piv;
        }
        for (size_t i = n - 1; i-- > 0;) x[i] -= c_prime[i] * x[i + 1];
        return x;
    };

    const std::vector<double> y = thomas(rhs);
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = alpha;
    const std::vector<double> z = thomas(u);

    const double fact =
        (y[0] + beta * y[n - 1] / gamma) / (1.0 + z[0] + beta * z[n - 1] / gamma);
    std::vector<double> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = y[i] - fact * z[i];
    return x;
}

} // namespace

PeriodicPolySpline::PeriodicPolySpline(UniformGrid grid, int degree, std::vector<double> values,
                                       std::vector<double> moments)
    : grid_(std::move(grid)), degree_(degree), values_(std::move(values)),
      moments_(std::move(moments)) {
    if (degree_ != 1 && degree_ != 3)
        throw ValidationError("PeriodicPolySpline supports degree 1 or 3");
    if (values_.size() != static_cast<size_t>(grid_.size()) || moments_.size() != values_.size())
        throw GridMismatch("value/moment arrays must match the grid size");
}

double PeriodicPolySpline::eval(double t, int q) const {
    if (!std::isfinite(t)) throw NonFinite("eval requires finite t");
    if (q < 0 || q > degree_)
        throw DerivativeOrderTooHigh("polynomial spline derivative order exceeds the degree");

    const int big_n = grid_.size();
    const double h = grid_.spacing();
    const double u = wrap_to_period(t);
    int j = static_cast<int>(std::floor(u / h));
    if (j >= big_n) j = big_n - 1;
    const int jn = (j + 1) % big_n;
    const double x = u - j * h;        // distance from the left node
    const double y = h - x;            // distance to the right node
    const double fj = values_[static_cast<size_t>(j)];
    const double fn = values_[static_cast<size_t>(jn)];

    if (degree_ == 1) {
        if (q == 0) return (fj * y + fn * x) / h;
        return (fn - fj) / h;
    }

    const double mj = moments_[static_cast<size_t>(j)];
    const double mn = moments_[static_cast<size_t>(jn)];
    switch (q) {
    case 0:
        return mj * y * y * y / (6.0 * h) + mn * x * x * x / (6.0 * h) +
               (fj - mj * h * h / 6.0) * y / h + (fn - mn * h * h / 6.0) * x / h;
    case 1:
        return -mj * y * y / (2.0 * h) + mn * x * x / (2.0 * h) + (fn - fj) / h -
               (mn - mj) * h / 6.0;
    case 2:
        return (mj * y + mn * x) / h;
    default:
        return (mn - mj) / h;
    }
}

PeriodicPolySpline build_linear(const SampleSet& samples) {
    if (samples.grid().indicator() != Indicator::I0)
        throw GridMismatch("polynomial oracles expect samples on the I0 grid");
    return PeriodicPolySpline(samples.grid(), 1, samples.values(),
                              std::vector<double>(samples.values().size(), 0.0));
}

PeriodicPolySpline build_cubic_periodic(const SampleSet& samples) {
    if (samples.grid().indicator() != Indicator::I0)
        throw GridMismatch("polynomial oracles expect samples on the I0 grid");
    const int big_n = samples.grid().size();
    const double h = samples.grid().spacing();
    const std::vector<double>& f = samples.values();
    std::vector<double> rhs(static_cast<size_t>(big_n));
    for (int j = 0; j < big_n; ++j) {
        const int jm = (j + big_n - 1) % big_n;
        const int jp = (j + 1) % big_n;
        rhs[static_cast<size_t>(j)] =
            6.0 / (h * h) *
            (f[static_cast<size_t>(jm)] - 2.0 * f[static_cast<size_t>(j)] + f[static_cast<size_t>(jp)]);
    }
    return PeriodicPolySpline(samples.grid(), 3, f, solve_cyclic_141(rhs));
}

double eval_poly(const PeriodicPolySpline& s, double t, int q) {
    return s.eval(t, q);
}

std::vector<double> moments_via_trigspline(const SampleSet& samples, const TailControl& tail) {
    if (samples.grid().indicator() != Indicator::I0)
        throw GridMismatch("moments_via_trigspline expects samples on the I0 grid");
    SplineSpec spec;
    spec.gamma = {1.0, 1.0, 1.0};
    spec.eta = {1.0, 1.0, 1.0};
    spec.kind = FactorKind::Nu1;
    spec.r = 3;
    spec.i1 = Indicator::I0;
    spec.i2 = Indicator::I0;
    spec.tail = tail;
    const TrigSpline s = build_spline(samples, spec);
    return s.eval_uniform(samples.grid().size(), 2);
}

} // namespace trigspline
