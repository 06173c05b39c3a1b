#include "trigspline/spline.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>

#include "trigspline/detail/numeric.hpp"

namespace trigspline {

using detail::ipow;
using detail::NeumaierSum;
using detail::phase_mod_2pi;
using detail::unit_phasor;

namespace {

// Rotation drift of the alias recurrence is capped by re-seeding the phasor
// from the double-double reduction every this many steps.
constexpr long kReseedInterval = 256;

// Re(i^q z) and Im(i^q z): the derivative phase shift cos(x + q pi/2).
inline double rot_re(const std::complex<double>& z, int q4) noexcept {
    switch (q4) {
    case 0: return z.real();
    case 1: return -z.imag();
    case 2: return -z.real();
    default: return z.imag();
    }
}

inline double rot_im(const std::complex<double>& z, int q4) noexcept {
    switch (q4) {
    case 0: return z.imag();
    case 1: return z.real();
    case 2: return -z.imag();
    default: return -z.real();
    }
}

std::complex<double> iq_phasor(int q4) noexcept {
    switch (q4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

// Certified alias count for one harmonic at derivative order q >= 1: smallest
// M with weight * tail_bound(M) <= rel_tol * anchor. Both weight and anchor
// must be invariant under the half-step coefficient rotation
// (a_k, b_k) -> R(k pi / N)(a_k, b_k), so the same M is chosen on both sides
// of the shift identity and truncation cancels there exactly.
long certified_alias_count(FactorKind kind, int r, int N, int k, int q, double weight,
                           double anchor, const TailControl& tail) {
    if (weight <= 0.0) return 0;
    const double target = tail.rel_tol * anchor;
    if (!(target > 0.0)) return tail.max_terms;
    const int p = 1 + r - q;
    const double b = alias_decay_constant(kind, r, N);
    const double rhs = weight * 2.0 * b / (N * (p - 1) * target);
    const double edge = std::pow(rhs, 1.0 / (p - 1));
    const double m_real = (edge + k) / N;
    if (m_real <= 1.0) return 1;
    if (m_real >= static_cast<double>(tail.max_terms)) return tail.max_terms;
    return static_cast<long>(std::ceil(m_real));
}

} // namespace

void validate(const SplineSpec& spec) {
    if (spec.r < 1)
        throw ValidationError("spline order r must be positive, got " + std::to_string(spec.r));
    if (spec.gamma.all_zero()) throw AllZeroParams("gamma must not be all zero");
    if (spec.eta.all_zero()) throw AllZeroParams("eta must not be all zero");
    if (spec.tail.rel_tol <= 0.0 || spec.tail.max_terms < 1)
        throw ValidationError("tail control requires rel_tol > 0 and max_terms >= 1");
}

struct TrigSpline::HarmonicPlan {
    int k = 0;
    double a_over_hc = 0.0;
    double b_over_hs = 0.0;
    long m_cos = 0;
    long m_sin = 0;
    double bound = 0.0;  // certified remainder bound of this harmonic
    double anchor = 0.0; // magnitude scale contribution
};

TrigSpline::TrigSpline(SplineSpec spec, FourierCoeffs coeffs, std::vector<FactorValue> hc,
                       std::vector<FactorValue> hs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    const auto n = static_cast<size_t>(coeffs_.harmonics());
    if (hc.size() != n || hs.size() != n)
        throw ValidationError("factor arrays must have length (N-1)/2");
    hc_.reserve(n);
    hs_.reserve(n);
    hc_terms_.reserve(n);
    hs_terms_.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        hc_.push_back(hc[i].value);
        hs_.push_back(hs[i].value);
        hc_terms_.push_back(hc[i].terms);
        hs_terms_.push_back(hs[i].terms);
        factor_achieved_ = std::max({factor_achieved_, hc[i].achieved_rel_tol,
                                     hs[i].achieved_rel_tol});
    }
}

void TrigSpline::check_q(int q) const {
    if (q < 0) throw ValidationError("derivative order must be nonnegative");
    if (q > spec_.r - 1)
        throw DerivativeOrderTooHigh(
            "derivative order " + std::to_string(q) + " exceeds r-1 = " +
            std::to_string(spec_.r - 1) +
            (q == spec_.r ? " (order r is available via eval_order_r_unsafe)" : ""));
}

std::vector<TrigSpline::HarmonicPlan> TrigSpline::plan(int q) const {
    const int n = harmonics();
    const int big_n = grid_size();
    const int r = spec_.r;
    const double g_alias = spec_.gamma.max_abs_alias();
    const double h_alias = spec_.eta.max_abs_alias();
    const double g_max = spec_.gamma.max_abs();
    const double h_max = spec_.eta.max_abs();

    std::vector<HarmonicPlan> plans;
    plans.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const size_t i = static_cast<size_t>(k - 1);
        HarmonicPlan p;
        p.k = k;
        p.a_over_hc = coeffs_.a()[i] / hc_[i];
        p.b_over_hs = coeffs_.b()[i] / hs_[i];

        const double hyp = std::hypot(coeffs_.a()[i], coeffs_.b()[i]);
        const double abs_hc = std::abs(hc_[i]);
        const double abs_hs = std::abs(hs_[i]);
        const double nu_k = std::abs(nu(spec_.kind, k, r, big_n));
        const double kq = ipow(static_cast<double>(k), q);
        p.anchor = hyp * (g_max / abs_hc + h_max / abs_hs) * nu_k * kq;
        const double weight = hyp * (g_alias / abs_hc + h_alias / abs_hs);

        if (q == 0) {
            // Reuse the denominators' own adaptive stops: the numerator alias
            // sum then matches hc/hs partial sums term for term and the
            // interpolation identity at the grid nodes holds exactly, however
            // short the budget.
            p.m_cos = hc_terms_[i];
            p.m_sin = hs_terms_[i];
        } else if (q == r) {
            p.m_cos = p.m_sin = weight > 0.0 ? spec_.tail.max_terms : 0;
        } else {
            p.m_cos = p.m_sin =
                certified_alias_count(spec_.kind, r, big_n, k, q, weight, p.anchor, spec_.tail);
        }

        if (q == r) {
            p.bound = weight > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        } else {
            const double wc = std::abs(p.a_over_hc) * g_alias;
            const double ws = std::abs(p.b_over_hs) * h_alias;
            if (wc > 0.0 && p.m_cos > 0)
                p.bound += wc * alias_tail_bound(spec_.kind, r, big_n, k, q, p.m_cos);
            if (ws > 0.0 && p.m_sin > 0)
                p.bound += ws * alias_tail_bound(spec_.kind, r, big_n, k, q, p.m_sin);
        }
        plans.push_back(p);
    }
    return plans;
}

TailCertificate TrigSpline::tail_certificate(int q) const {
    check_q(q);
    const auto plans = plan(q);
    TailCertificate cert;
    cert.q = q;
    NeumaierSum bound, scale;
    for (const auto& p : plans) {
        bound.add(p.bound);
        scale.add(p.anchor);
        cert.max_alias_terms = std::max({cert.max_alias_terms, p.m_cos, p.m_sin});
    }
    if (q == 0) scale.add(std::abs(coeffs_.a0()) / 2.0);
    cert.abs_bound = bound.value();
    cert.scale = scale.value();
    const double tail_rel =
        cert.scale > 0.0 ? cert.abs_bound / cert.scale
                         : (cert.abs_bound > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    cert.achieved_rel_tol = std::max(tail_rel, factor_achieved_);
    const double slack = spec_.tail.rel_tol * 1.000001;
    cert.certified = cert.achieved_rel_tol <= slack;
    return cert;
}

double TrigSpline::eval_at(const std::vector<HarmonicPlan>& plans, double t, int q) const {
    const double t_red = wrap_to_period(t);
    const int big_n = grid_size();
    const int q4 = q & 3;
    const bool i1_odd = spec_.i1 == Indicator::I1;
    const ParamVector& g = spec_.gamma;
    const ParamVector& e = spec_.eta;

    NeumaierSum total;
    if (q == 0) total.add(coeffs_.a0() / 2.0);

    for (const auto& p : plans) {
        if (p.a_over_hc == 0.0 && p.b_over_hs == 0.0) continue;
        const double nu_k = nu(spec_.kind, p.k, spec_.r, big_n);
        const double kq = q == 0 ? 1.0 : ipow(static_cast<double>(p.k), q);
        const std::complex<double> ek = unit_phasor(p.k, t_red);
        total.add(p.a_over_hc * g.g1 * nu_k * kq * rot_re(ek, q4) +
                  p.b_over_hs * e.g1 * nu_k * kq * rot_im(ek, q4));

        const long m_max = std::max(p.m_cos, p.m_sin);
        if (m_max <= 0) continue;

        const AliasNuSeries nus(spec_.kind, p.k, spec_.r, big_n);
        const std::complex<double> step = unit_phasor(big_n, t_red);
        std::complex<double> w = step;
        NeumaierSum inner;
        for (long m = 1; m <= m_max; ++m) {
            if (m != 1 && (m % kReseedInterval) == 1)
                w = unit_phasor(static_cast<double>(m) * big_n, t_red);
            const double sign = (i1_odd && (m % 2) != 0) ? -1.0 : 1.0;
            const double nu_p = nus.plus(m);
            const double nu_m = nus.minus(m);
            const double om_p = static_cast<double>(m) * big_n + p.k;
            const double om_m = static_cast<double>(m) * big_n - p.k;
            const double wp = q == 0 ? 1.0 : ipow(om_p, q);
            const double wm = q == 0 ? 1.0 : ipow(om_m, q);
            const std::complex<double> zp = w * ek;
            const std::complex<double> zm = w * std::conj(ek);
            if (m <= p.m_cos)
                inner.add(sign * p.a_over_hc *
                          (g.g2 * nu_p * wp * rot_re(zp, q4) + g.g3 * nu_m * wm * rot_re(zm, q4)));
            if (m <= p.m_sin)
                inner.add(sign * p.b_over_hs *
                          (e.g2 * nu_p * wp * rot_im(zp, q4) - e.g3 * nu_m * wm * rot_im(zm, q4)));
            w *= step;
        }
        total.add(inner.value());
    }
    return total.value();
}

double TrigSpline::eval(double t, int q, TailPolicy policy) const {
    check_q(q);
    if (!std::isfinite(t)) throw NonFinite("eval requires finite t");
    if (policy == TailPolicy::Strict) {
        const auto cert = tail_certificate(q);
        if (!cert.certified)
            throw TailBudgetExceeded("eval: certified remainder " +
                                     std::to_string(cert.achieved_rel_tol) +
                                     " exceeds tail rel_tol with max_terms budget");
    }
    return eval_at(plan(q), t, q);
}

std::vector<double> TrigSpline::eval_uniform(int points, int q, double offset,
                                             TailPolicy policy) const {
    check_q(q);
    if (points < 1) throw ValidationError("eval_uniform requires points >= 1");
    if (!std::isfinite(offset)) throw NonFinite("eval_uniform requires finite offset");
    if (policy == TailPolicy::Strict) {
        const auto cert = tail_certificate(q);
        if (!cert.certified)
            throw TailBudgetExceeded("eval_uniform: tail budget cannot certify rel_tol");
    }

    const auto plans = plan(q);
    const int big_n = grid_size();
    const int q4 = q & 3;
    const bool i1_odd = spec_.i1 == Indicator::I1;
    const ParamVector& g = spec_.gamma;
    const ParamVector& e = spec_.eta;
    const std::complex<double> rq = iq_phasor(q4);
    const auto p_bins = static_cast<size_t>(points);

    // Fold every series frequency into its bin omega mod points: at the
    // uniform points offset + 2 pi i / points the phase splits into the
    // offset part (absorbed into the amplitude) and an exact root of unity.
    std::vector<std::complex<double>> bins(p_bins, {0.0, 0.0});
    size_t bin_hi = 0;
    const auto deposit = [&](long omega, const std::complex<double>& amp) {
        const auto b = static_cast<size_t>(omega % points);
        bins[b] += amp;
        bin_hi = std::max(bin_hi, b + 1);
    };

    for (const auto& p : plans) {
        if (p.a_over_hc == 0.0 && p.b_over_hs == 0.0) continue;
        const double nu_k = nu(spec_.kind, p.k, spec_.r, big_n);
        const double kq = q == 0 ? 1.0 : ipow(static_cast<double>(p.k), q);
        const std::complex<double> ek_off = unit_phasor(p.k, offset);
        deposit(p.k, rq * ek_off *
                         std::complex<double>(p.a_over_hc * g.g1 * nu_k * kq,
                                              -p.b_over_hs * e.g1 * nu_k * kq));

        const long m_max = std::max(p.m_cos, p.m_sin);
        if (m_max <= 0) continue;

        const AliasNuSeries nus(spec_.kind, p.k, spec_.r, big_n);
        const std::complex<double> step = unit_phasor(big_n, offset);
        std::complex<double> u = step;
        for (long m = 1; m <= m_max; ++m) {
            if (m != 1 && (m % kReseedInterval) == 1)
                u = unit_phasor(static_cast<double>(m) * big_n, offset);
            const double sign = (i1_odd && (m % 2) != 0) ? -1.0 : 1.0;
            const double nu_p = nus.plus(m);
            const double nu_m = nus.minus(m);
            const double om_p = static_cast<double>(m) * big_n + p.k;
            const double om_m = static_cast<double>(m) * big_n - p.k;
            const double wp = q == 0 ? 1.0 : ipow(om_p, q);
            const double wm = q == 0 ? 1.0 : ipow(om_m, q);
            const double ca_p = m <= p.m_cos ? sign * p.a_over_hc * g.g2 * nu_p * wp : 0.0;
            const double cb_p = m <= p.m_sin ? sign * p.b_over_hs * e.g2 * nu_p * wp : 0.0;
            const double ca_m = m <= p.m_cos ? sign * p.a_over_hc * g.g3 * nu_m * wm : 0.0;
            const double cb_m = m <= p.m_sin ? -sign * p.b_over_hs * e.g3 * nu_m * wm : 0.0;
            deposit(static_cast<long>(m) * big_n + p.k,
                    rq * (u * ek_off) * std::complex<double>(ca_p, -cb_p));
            deposit(static_cast<long>(m) * big_n - p.k,
                    rq * (u * std::conj(ek_off)) * std::complex<double>(ca_m, -cb_m));
            u *= step;
        }
    }

    // Synthesis with exact root-of-unity angles from a table: the index
    // b*i mod points is computed in integers, so there is no phase drift.
    std::vector<double> cos_tab(p_bins), sin_tab(p_bins);
    for (size_t j = 0; j < p_bins; ++j) {
        const double angle = detail::kTwoPi * static_cast<double>(j) / points;
        cos_tab[j] = std::cos(angle);
        sin_tab[j] = std::sin(angle);
    }
    const double base = q == 0 ? coeffs_.a0() / 2.0 : 0.0;
    std::vector<double> out(p_bins, base);
    for (size_t i = 0; i < p_bins; ++i) {
        double acc = 0.0;
        size_t idx = 0;
        for (size_t b = 0; b < bin_hi; ++b) {
            acc += bins[b].real() * cos_tab[idx] - bins[b].imag() * sin_tab[idx];
            idx += i;
            if (idx >= p_bins) idx -= p_bins;
        }
        out[i] += acc;
    }
    return out;
}

double TrigSpline::eval_order_r_unsafe(double t) const {
    if (!std::isfinite(t)) throw NonFinite("eval requires finite t");
    // Same series with q = r; the alias sums are capped at max_terms and no
    // remainder certificate exists (the differentiated series is not
    // uniformly convergent).
    return eval_at(plan(spec_.r), t, spec_.r);
}

TrigSpline build_spline(const SampleSet& samples, const SplineSpec& spec) {
    validate(spec);
    if (samples.grid().indicator() != spec.i2)
        throw GridMismatch("sample grid indicator does not match spec.i2");
    FourierCoeffs coeffs = dft_coeffs(samples);
    const int n = coeffs.harmonics();
    const int big_n = samples.grid().size();
    std::vector<FactorValue> hcv, hsv;
    hcv.reserve(static_cast<size_t>(n));
    hsv.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        hcv.push_back(hc(spec.gamma, spec.kind, k, spec.r, big_n, spec.i1, spec.i2, spec.tail));
        hsv.push_back(hs(spec.eta, spec.kind, k, spec.r, big_n, spec.i1, spec.i2, spec.tail));
    }
    return TrigSpline(spec, std::move(coeffs), std::move(hcv), std::move(hsv));
}

namespace {

struct FundamentalSetup {
    std::vector<double> hc_values;
    std::vector<long> m_caps;
};

// Numerator phase factor: (-1)^(m(I1-I2)), matching the denominator, so that
// st_k collapses to the Dirichlet kernel at the grid nodes. (With unit data
// the general spline series reduces to exactly this form.)
FundamentalSetup fundamental_setup(const SplineSpec& spec, const UniformGrid& grid, int k, int q) {
    validate(spec);
    if (!(spec.gamma == spec.eta))
        throw FundamentalRequiresEqualParams("fundamental splines require gamma == eta");
    if (grid.indicator() != spec.i2)
        throw GridMismatch("fundamental spline grid must be the I2 grid");
    if (k < 1 || k > grid.size())
        throw IndexOutOfRange("fundamental index " + std::to_string(k) + " outside 1.." +
                              std::to_string(grid.size()));
    if (q < 0) throw ValidationError("derivative order must be nonnegative");
    if (q > spec.r - 1)
        throw DerivativeOrderTooHigh("fundamental spline derivative order exceeds r-1");

    const int n = grid.harmonics();
    const int big_n = grid.size();
    FundamentalSetup setup;
    setup.hc_values.reserve(static_cast<size_t>(n));
    setup.m_caps.reserve(static_cast<size_t>(n));
    const double g_alias = spec.gamma.max_abs_alias();
    const double g_max = spec.gamma.max_abs();
    for (int j = 1; j <= n; ++j) {
        const FactorValue f = hc(spec.gamma, spec.kind, j, spec.r, big_n, spec.i1, spec.i2, spec.tail);
        setup.hc_values.push_back(f.value);
        if (q == 0) {
            setup.m_caps.push_back(f.terms);
        } else {
            const double abs_h = std::abs(f.value);
            const double anchor =
                (g_max / abs_h) * std::abs(nu(spec.kind, j, spec.r, big_n)) *
                ipow(static_cast<double>(j), q);
            setup.m_caps.push_back(certified_alias_count(spec.kind, spec.r, big_n, j, q,
                                                         g_alias / abs_h, anchor, spec.tail));
        }
    }
    return setup;
}

} // namespace

double eval_fundamental(const SplineSpec& spec, const UniformGrid& grid, int k, double t, int q) {
    if (!std::isfinite(t)) throw NonFinite("eval_fundamental requires finite t");
    const FundamentalSetup setup = fundamental_setup(spec, grid, k, q);
    const int n = grid.harmonics();
    const int big_n = grid.size();
    const int q4 = q & 3;
    const double tau = wrap_to_period(t - grid.node(k));
    const bool alternating = spec.i1 != spec.i2;
    const ParamVector& g = spec.gamma;

    NeumaierSum total;
    if (q == 0) total.add(1.0);
    for (int j = 1; j <= n; ++j) {
        const size_t i = static_cast<size_t>(j - 1);
        const double inv_h = 2.0 / setup.hc_values[i];
        const double nu_j = nu(spec.kind, j, spec.r, big_n);
        const double jq = q == 0 ? 1.0 : ipow(static_cast<double>(j), q);
        const std::complex<double> ej = unit_phasor(j, tau);
        total.add(inv_h * g.g1 * nu_j * jq * rot_re(ej, q4));

        const long m_max = setup.m_caps[i];
        if (m_max <= 0) continue;
        const AliasNuSeries nus(spec.kind, j, spec.r, big_n);
        const std::complex<double> step = unit_phasor(big_n, tau);
        std::complex<double> w = step;
        NeumaierSum inner;
        for (long m = 1; m <= m_max; ++m) {
            if (m != 1 && (m % kReseedInterval) == 1)
                w = unit_phasor(static_cast<double>(m) * big_n, tau);
            const double sign = (alternating && (m % 2) != 0) ? -1.0 : 1.0;
            const double wp = q == 0 ? 1.0 : ipow(static_cast<double>(m) * big_n + j, q);
            const double wm = q == 0 ? 1.0 : ipow(static_cast<double>(m) * big_n - j, q);
            inner.add(sign * inv_h *
                      (g.g2 * nus.plus(m) * wp * rot_re(w * ej, q4) +
                       g.g3 * nus.minus(m) * wm * rot_re(w * std::conj(ej), q4)));
            w *= step;
        }
        total.add(inner.value());
    }
    return total.value() / big_n;
}

std::vector<double> eval_fundamental_uniform(const SplineSpec& spec, const UniformGrid& grid,
                                             int k, int points, int q) {
    if (points < 1) throw ValidationError("eval_fundamental_uniform requires points >= 1");
    const FundamentalSetup setup = fundamental_setup(spec, grid, k, q);
    const int n = grid.harmonics();
    const int big_n = grid.size();
    const int q4 = q & 3;
    const double tk = grid.node(k);
    const bool alternating = spec.i1 != spec.i2;
    const ParamVector& g = spec.gamma;
    const std::complex<double> rq = iq_phasor(q4);
    const auto p_bins = static_cast<size_t>(points);

    std::vector<std::complex<double>> bins(p_bins, {0.0, 0.0});
    size_t bin_hi = 0;
    const auto deposit = [&](long omega, const std::complex<double>& amp) {
        const auto b = static_cast<size_t>(omega % points);
        bins[b] += amp;
        bin_hi = std::max(bin_hi, b + 1);
    };

    for (int j = 1; j <= n; ++j) {
        const size_t i = static_cast<size_t>(j - 1);
        const double inv_h = 2.0 / setup.hc_values[i];
        const double nu_j = nu(spec.kind, j, spec.r, big_n);
        const double jq = q == 0 ? 1.0 : ipow(static_cast<double>(j), q);
        const std::complex<double> ej = unit_phasor(j, -tk);
        deposit(j, rq * ej * (inv_h * g.g1 * nu_j * jq));

        const long m_max = setup.m_caps[i];
        if (m_max <= 0) continue;
        const AliasNuSeries nus(spec.kind, j, spec.r, big_n);
        const std::complex<double> step = unit_phasor(big_n, -tk);
        std::complex<double> u = step;
        for (long m = 1; m <= m_max; ++m) {
            if (m != 1 && (m % kReseedInterval) == 1)
                u = unit_phasor(static_cast<double>(m) * big_n, -tk);
            const double sign = (alternating && (m % 2) != 0) ? -1.0 : 1.0;
            const double wp = q == 0 ? 1.0 : ipow(static_cast<double>(m) * big_n + j, q);
            const double wm = q == 0 ? 1.0 : ipow(static_cast<double>(m) * big_n - j, q);
            deposit(static_cast<long>(m) * big_n + j,
                    rq * (u * ej) * (sign * inv_h * g.g2 * nus.plus(m) * wp));
            deposit(static_cast<long>(m) * big_n - j,
                    rq * (u * std::conj(ej)) * (sign * inv_h * g.g3 * nus.minus(m) * wm));
            u *= step;
        }
    }

    std::vector<double> cos_tab(p_bins), sin_tab(p_bins);
    for (size_t j = 0; j < p_bins; ++j) {
        const double angle = detail::kTwoPi * static_cast<double>(j) / points;
        cos_tab[j] = std::cos(angle);
        sin_tab[j] = std::sin(angle);
    }
    const double base = q == 0 ? 1.0 : 0.0;
    std::vector<double> out(p_bins, base / big_n);
    for (size_t i = 0; i < p_bins; ++i) {
        double acc = 0.0;
        size_t idx = 0;
        for (size_t b = 0; b < bin_hi; ++b) {
            acc += bins[b].real() * cos_tab[idx] - bins[b].imag() * sin_tab[idx];
            idx += i;
            if (idx >= p_bins) idx -= p_bins;
        }
        out[i] += acc / big_n;
    }
    return out;
}

double reconstruct_from_fundamentals(std::span<const double> values, const SplineSpec& spec,
                                     const UniformGrid& grid, double t, int q) {
    if (static_cast<int>(values.size()) != grid.size())
        throw GridMismatch("value count does not match grid size");
    NeumaierSum sum;
    for (int k = 1; k <= grid.size(); ++k)
        sum.add(values[static_cast<size_t>(k - 1)] * eval_fundamental(spec, grid, k, t, q));
    return sum.value();
}

} // namespace trigspline
