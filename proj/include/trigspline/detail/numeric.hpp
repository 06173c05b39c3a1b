#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace trigspline::detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// Double-double split of 2*pi: kTwoPiHi + kTwoPiLo approximates 2*pi to ~1e-32.
inline constexpr double kTwoPiHi = 6.283185307179586;
inline constexpr double kTwoPiLo = 2.4492935982947064e-16;

/// Neumaier compensated accumulator. Order-insensitive to ~1 ulp of the total.
class NeumaierSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// x^e for e >= 0 by binary exponentiation.
inline double ipow(double x, long e) noexcept {
    double r = 1.0, b = x;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

/// (omega * t) mod 2*pi in [0, 2*pi), accurate for integer-valued omega up to
/// ~2^45. The product is formed exactly with an FMA split and reduced against
/// the double-double 2*pi, so the result carries ~1 ulp of absolute error no
/// matter how large omega * t grows.
inline double phase_mod_2pi(double omega, double t) noexcept {
    const double hi = omega * t;
    const double lo = std::fma(omega, t, -hi);
    const double k = std::nearbyint(hi * (1.0 / kTwoPiHi));
    double r = std::fma(-k, kTwoPiHi, hi);
    r = std::fma(-k, kTwoPiLo, r + lo);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r -= kTwoPi;
    return r;
}

/// exp(i * ((omega * t) mod 2*pi)) via the accurate reduction above.
inline std::complex<double> unit_phasor(double omega, double t) noexcept {
    const double a = phase_mod_2pi(omega, t);
    return {std::cos(a), std::sin(a)};
}

} // namespace trigspline::detail
