#pragma once

#include <cmath>
#include <numbers>
#include <string_view>

#include "trigspline/detail/numeric.hpp"
#include "trigspline/errors.hpp"
#include "trigspline/grid.hpp"

namespace trigspline {

/// Convergence factor families. All decay like k^-(1+r):
///   Nu1: sinc(pi k / N)^(1+r)        (signed)
///   Nu2: |sinc(pi k / N)|^(1+r)
///   Nu3: (1/k)^(1+r)
///   Nu4: sign(sin(pi k / N)) (1/k)^(1+r)
enum class FactorKind { Nu1, Nu2, Nu3, Nu4 };

FactorKind factor_kind_from_string(std::string_view s);
const char* to_string(FactorKind kind) noexcept;

/// Parameter triple (the Gamma or H vector). The three components may take
/// arbitrary real values but must not all vanish.
struct ParamVector {
    double g1 = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;

    bool all_zero() const noexcept { return g1 == 0.0 && g2 == 0.0 && g3 == 0.0; }
    double abs_sum() const noexcept { return std::abs(g1) + std::abs(g2) + std::abs(g3); }
    double max_abs() const noexcept;
    double max_abs_alias() const noexcept { return std::max(std::abs(g2), std::abs(g3)); }

    friend bool operator==(const ParamVector&, const ParamVector&) = default;
};

/// Truncation control for the alias series (the defining sums run to
/// infinity). rel_tol is the requested relative remainder bound; max_terms
/// caps the number of alias terms per harmonic.
struct TailControl {
    double rel_tol = 1e-12;
    long max_terms = 200000;
};

inline constexpr double kDegeneracyTol = 1e-10;

/// Convergence factor nu_k(r) for any k >= 1 (including alias indices
/// k = mN +- j). The sine argument is reduced exactly in integer arithmetic,
/// so the sign and magnitude stay correct for arbitrarily large k.
double nu(FactorKind kind, long k, int r, int N);

/// Per-harmonic generator of signed nu values at the alias frequencies
/// mN + k and mN - k. sin(pi (mN +- k)/N) = -+ (-1)^(m+1) sin(pi k / N), so no
/// large-argument trig is ever evaluated.
class AliasNuSeries {
public:
    AliasNuSeries(FactorKind kind, int k, int r, int N)
        : kind_(kind), k_(k), big_n_(N), rp1_(r + 1) {
        sin_over_pi_n_ = std::sin(std::numbers::pi_v<double> * k / N) * N / std::numbers::pi_v<double>;
        odd_power_ = (rp1_ % 2) != 0;
    }

    /// nu_{mN+k}(r), m >= 1.
    double plus(long m) const noexcept {
        const long j = m * big_n_ + k_;
        return from_parity(j, (m % 2) != 0);
    }

    /// nu_{mN-k}(r), m >= 1.
    double minus(long m) const noexcept {
        const long j = m * big_n_ - k_;
        return from_parity(j, (m % 2) == 0);
    }

private:
    // odd_sign: whether sin(pi j / N) < 0 for this alias index.
    double from_parity(long j, bool odd_sign) const noexcept {
        switch (kind_) {
        case FactorKind::Nu1: {
            const double mag = detail::ipow(sin_over_pi_n_ / static_cast<double>(j), rp1_);
            return (odd_sign && odd_power_) ? -mag : mag;
        }
        case FactorKind::Nu2:
            // sin_over_pi_n_ > 0 for 1 <= k <= n, so this is already |sinc|^(1+r).
            return detail::ipow(sin_over_pi_n_ / static_cast<double>(j), rp1_);
        case FactorKind::Nu3:
            return detail::ipow(1.0 / static_cast<double>(j), rp1_);
        case FactorKind::Nu4: {
            const double mag = detail::ipow(1.0 / static_cast<double>(j), rp1_);
            return odd_sign ? -mag : mag;
        }
        }
        return 0.0;
    }

    FactorKind kind_;
    int k_;
    int big_n_;
    long rp1_;
    double sin_over_pi_n_ = 0.0;
    bool odd_power_ = false;
};

/// Result of an interpolation-factor evaluation: the truncated value plus the
/// truncation quality actually achieved (equal to the requested rel_tol when
/// the certified remainder bound reached it within budget, coarser otherwise).
struct FactorValue {
    double value = 0.0;
    double achieved_rel_tol = 0.0;
    long terms = 0;
};

/// Interpolation factor
///   hc_k = g1 nu_k + sum_{m>=1} (-1)^(m (I1-I2)) [g2 nu_{mN+k} + g3 nu_{mN-k}].
/// Throws AllZeroParams, DegenerateFactor.
FactorValue hc(const ParamVector& gamma, FactorKind kind, int k, int r, int N,
               Indicator i1, Indicator i2, const TailControl& tail = {},
               double degeneracy_tol = kDegeneracyTol);

/// Same series with the H vector (the sine-side denominator).
FactorValue hs(const ParamVector& eta, FactorKind kind, int k, int r, int N,
               Indicator i1, Indicator i2, const TailControl& tail = {},
               double degeneracy_tol = kDegeneracyTol);

/// Smallest alias count M whose certified remainder bound falls below
/// rel_tol times the leading-term scale |nu_n(r)|. Throws TailBudgetExceeded
/// when no M <= max_terms suffices.
long tail_length(FactorKind kind, int r, int N, double rel_tol,
                 long max_terms = TailControl{}.max_terms);

/// Uniform magnitude bound |nu_j(r)| <= B j^-(1+r): B = (N/pi)^(1+r) for
/// Nu1/Nu2 and B = 1 for Nu3/Nu4.
double alias_decay_constant(FactorKind kind, int r, int N);

/// Certified bound on sum_{m>M} [(mN+k)^q |nu_{mN+k}| + (mN-k)^q |nu_{mN-k}|]
/// by integral comparison; requires q <= r - 1 (decay exponent p = 1+r-q >= 2)
/// and M >= 1.
double alias_tail_bound(FactorKind kind, int r, int N, int k, int q, long m_from);

} // namespace trigspline
