#include "trigspline/factors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace trigspline {

using detail::ipow;
using detail::NeumaierSum;

namespace {

void check_grid_params(int k, int r, int N) {
    if (N < 3 || N % 2 == 0)
        throw ValidationError("N must be odd and at least 3, got " + std::to_string(N));
    if (r < 1) throw ValidationError("spline order r must be positive, got " + std::to_string(r));
    if (k < 1 || k > (N - 1) / 2)
        throw IndexOutOfRange("harmonic index " + std::to_string(k) + " outside 1..(N-1)/2");
}

} // namespace

FactorKind factor_kind_from_string(std::string_view s) {
    if (s == "nu1") return FactorKind::Nu1;
    if (s == "nu2") return FactorKind::Nu2;
    if (s == "nu3") return FactorKind::Nu3;
    if (s == "nu4") return FactorKind::Nu4;
    throw ValidationError("unknown factor kind '" + std::string(s) + "' (expected nu1|nu2|nu3|nu4)");
}

const char* to_string(FactorKind kind) noexcept {
    switch (kind) {
    case FactorKind::Nu1: return "nu1";
    case FactorKind::Nu2: return "nu2";
    case FactorKind::Nu3: return "nu3";
    case FactorKind::Nu4: return "nu4";
    }
    return "?";
}

double ParamVector::max_abs() const noexcept {
    return std::max({std::abs(g1), std::abs(g2), std::abs(g3)});
}

double nu(FactorKind kind, long k, int r, int N) {
    if (k < 1) throw IndexOutOfRange("nu requires k >= 1");
    if (r < 1) throw ValidationError("nu requires r >= 1");
    if (N < 3 || N % 2 == 0)
        throw ValidationError("nu requires odd N >= 3, got " + std::to_string(N));
    const long rp1 = r + 1;
    switch (kind) {
    case FactorKind::Nu3:
        return ipow(1.0 / static_cast<double>(k), rp1);
    case FactorKind::Nu4: {
        const long rem = k % N;
        if (rem == 0) return 0.0; // sign(sin(pi k / N)) = 0
        const bool neg = ((k / N) % 2) != 0;
        const double mag = ipow(1.0 / static_cast<double>(k), rp1);
        return neg ? -mag : mag;
    }
    case FactorKind::Nu1:
    case FactorKind::Nu2: {
        const long rem = k % N;
        if (rem == 0) return 0.0;
        // sin(pi k / N) = (-1)^(k div N) sin(pi (k mod N) / N): exact reduction.
        const double s =
            std::sin(std::numbers::pi_v<double> * rem / N) * N / std::numbers::pi_v<double>;
        const double mag = ipow(s / static_cast<double>(k), rp1);
        if (kind == FactorKind::Nu2) return mag;
        const bool neg = ((k / N) % 2) != 0 && (rp1 % 2) != 0;
        return neg ? -mag : mag;
    }
    }
    return 0.0;
}

double alias_decay_constant(FactorKind kind, int r, int N) {
    if (kind == FactorKind::Nu1 || kind == FactorKind::Nu2)
        return ipow(N / std::numbers::pi_v<double>, r + 1);
    return 1.0;
}

double alias_tail_bound(FactorKind kind, int r, int N, int k, int q, long m_from) {
    const int p = 1 + r - q;
    if (p < 2)
        throw ValidationError("alias_tail_bound requires q <= r - 1");
    if (m_from < 1) throw ValidationError("alias_tail_bound requires m_from >= 1");
    const double b = alias_decay_constant(kind, r, N);
    const double edge = static_cast<double>(N) * static_cast<double>(m_from) - k;
    return 2.0 * b / (N * (p - 1)) * ipow(1.0 / edge, p - 1);
}

namespace {

FactorValue interpolation_factor(const ParamVector& g, FactorKind kind, int k, int r, int N,
                                 Indicator i1, Indicator i2, const TailControl& tail,
                                 double degeneracy_tol, const char* name) {
    check_grid_params(k, r, N);
    if (g.all_zero()) throw AllZeroParams(std::string(name) + ": parameter vector is all zero");
    if (tail.rel_tol <= 0.0 || tail.max_terms < 1)
        throw ValidationError("tail control requires rel_tol > 0 and max_terms >= 1");

    NeumaierSum sum;
    sum.add(g.g1 * nu(kind, k, r, N));

    FactorValue out;
    const double alias_weight = g.max_abs_alias();
    if (alias_weight > 0.0) {
        const AliasNuSeries nus(kind, k, r, N);
        const bool alternating = value(i1) != value(i2); // (-1)^(m(I1-I2))
        double bound = 0.0;
        for (long m = 1; m <= tail.max_terms; ++m) {
            const double sign = (alternating && (m % 2) != 0) ? -1.0 : 1.0;
            sum.add(sign * (g.g2 * nus.plus(m) + g.g3 * nus.minus(m)));
            out.terms = m;
            bound = alias_weight * alias_tail_bound(kind, r, N, k, 0, m);
            if (bound <= tail.rel_tol * std::abs(sum.value())) break;
        }
        const double mag = std::abs(sum.value());
        out.achieved_rel_tol = mag > 0.0 ? bound / mag : std::numeric_limits<double>::infinity();
        out.achieved_rel_tol = std::max(out.achieved_rel_tol, tail.rel_tol);
    } else {
        out.achieved_rel_tol = 0.0; // finite sum, no tail at all
    }
    out.value = sum.value();

    const double scale = g.abs_sum() * std::abs(nu(kind, k, r, N));
    if (std::abs(out.value) < degeneracy_tol * scale)
        throw DegenerateFactor(std::string(name) + "_" + std::to_string(k) +
                               " is degenerate: |" + std::to_string(out.value) +
                               "| below threshold");
    return out;
}

} // namespace

FactorValue hc(const ParamVector& gamma, FactorKind kind, int k, int r, int N, Indicator i1,
               Indicator i2, const TailControl& tail, double degeneracy_tol) {
    return interpolation_factor(gamma, kind, k, r, N, i1, i2, tail, degeneracy_tol, "hc");
}

FactorValue hs(const ParamVector& eta, FactorKind kind, int k, int r, int N, Indicator i1,
               Indicator i2, const TailControl& tail, double degeneracy_tol) {
    return interpolation_factor(eta, kind, k, r, N, i1, i2, tail, degeneracy_tol, "hs");
}

long tail_length(FactorKind kind, int r, int N, double rel_tol, long max_terms) {
    if (rel_tol <= 0.0) throw ValidationError("tail_length requires rel_tol > 0");
    if (N < 3 || N % 2 == 0)
        throw ValidationError("tail_length requires odd N >= 3");
    if (r < 1) throw ValidationError("tail_length requires r >= 1");
    const int n = (N - 1) / 2;
    const double scale = std::abs(nu(kind, n, r, N));
    // Invert the closed-form bound 2B/(N r) (NM-n)^-r <= rel_tol * scale.
    const double b = alias_decay_constant(kind, r, N);
    const double rhs = 2.0 * b / (N * static_cast<double>(r) * rel_tol * scale);
    const double edge = std::pow(rhs, 1.0 / r);
    const double m_real = (edge + n) / N;
    long m = m_real <= 1.0 ? 1 : static_cast<long>(std::ceil(m_real));
    if (m > max_terms)
        throw TailBudgetExceeded("tail_length: " + std::to_string(m) + " terms needed for rel_tol " +
                                 std::to_string(rel_tol) + ", budget is " + std::to_string(max_terms));
    return m;
}

} // namespace trigspline
