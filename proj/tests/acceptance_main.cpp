// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "trigspline/analysis.hpp"
#include "trigspline/polyoracle.hpp"
#include "trigspline/power.hpp"
#include "trigspline/spline.hpp"

using namespace trigspline;

namespace {

constexpr double kPi = std::numbers::pi_v<double>;
constexpr double kTau = 2.0 * kPi;

std::vector<double> random_values(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(static_cast<size_t>(n));
    for (double& x : v) x = dist(rng);
    return v;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

SplineSpec spec_of(FactorKind kind, int r, Indicator i1, Indicator i2,
                   ParamVector g = {1.0, 1.0, 1.0}, ParamVector e = {1.0, 1.0, 1.0}) {
    SplineSpec spec;
    spec.gamma = g;
    spec.eta = e;
    spec.kind = kind;
    spec.r = r;
    spec.i1 = i1;
    spec.i2 = i2;
    return spec;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// ---- criteria -------------------------------------------------------------

bool c01_interpolation(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_ratio = 0.0;
    for (int big_n : {3, 5, 9, 17}) {
        for (int r : {1, 2, 3, 5}) {
            for (FactorKind kind : {FactorKind::Nu1, FactorKind::Nu3}) {
                for (auto [i1, i2] : {std::pair{Indicator::I0, Indicator::I0},
                                      std::pair{Indicator::I0, Indicator::I1},
                                      std::pair{Indicator::I1, Indicator::I0},
                                      std::pair{Indicator::I1, Indicator::I1}}) {
                    const UniformGrid grid = make_grid(big_n, i2);
                    const std::vector<double> f =
                        random_values(big_n, 10000u + static_cast<unsigned>(100 * big_n + 10 * r));
                    const TrigSpline s =
                        build_spline(SampleSet(grid, f), spec_of(kind, r, i1, i2));
                    const double tol =
                        (kind == FactorKind::Nu3 && r == 1 ? 1e-5 : 1e-8) * (1.0 + max_abs(f));
                    const std::vector<double> at_nodes = s.eval_uniform(big_n, 0, grid.node(1));
                    for (int j = 0; j < big_n; ++j) {
                        const double res =
                            std::abs(at_nodes[static_cast<size_t>(j)] - f[static_cast<size_t>(j)]);
                        worst_ratio = std::max(worst_ratio, res / tol);
                    }
                }
            }
        }
    }
    const double elapsed = seconds_since(t0);
    detail = "worst residual/tol = " + fmt(worst_ratio) +
             ", elapsed = " + fmt(elapsed) + " s (< 30)";
    return worst_ratio <= 1.0 && elapsed < 30.0;
}

bool c02_polynomial_collapse(std::string& detail) {
    double worst = 0.0;
    for (int big_n : {5, 9}) {
        const UniformGrid grid = make_grid(big_n, Indicator::I0);
        const std::vector<double> f = random_values(big_n, 20000u + big_n);
        const TrigSpline s = build_spline(
            SampleSet(grid, f),
            spec_of(FactorKind::Nu1, 3, Indicator::I0, Indicator::I0, {1, 0, 0}, {1, 0, 0}));
        const FourierCoeffs c = dft_coeffs(SampleSet(grid, f));
        const std::vector<double> vals = s.eval_uniform(1000);
        for (int i = 0; i < 1000; ++i)
            worst = std::max(worst, std::abs(vals[static_cast<size_t>(i)] -
                                             eval_trig_poly(c, kTau * i / 1000.0)));
    }
    detail = "sup |St - T_n| = " + fmt(worst) + " (<= 1e-12)";
    return worst <= 1e-12;
}

bool c03_broken_line(std::string& detail) {
    double worst = 0.0;
    for (int big_n : {5, 9}) {
        const UniformGrid grid = make_grid(big_n, Indicator::I0);
        const std::vector<double> f = random_values(big_n, 30000u + big_n);
        const SampleSet samples(grid, f);
        const TrigSpline s =
            build_spline(samples, spec_of(FactorKind::Nu1, 1, Indicator::I0, Indicator::I0));
        const PeriodicPolySpline lin = build_linear(samples);
        const std::vector<double> vals = s.eval_uniform(1000);
        for (int i = 0; i < 1000; ++i)
            worst = std::max(worst, std::abs(vals[static_cast<size_t>(i)] -
                                             lin.eval(kTau * i / 1000.0)));
    }
    detail = "sup |St - broken line| = " + fmt(worst) + " (<= 1e-5)";
    return worst <= 1e-5;
}

bool c04_cubic_equivalence(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_ratio = 0.0;
    for (int big_n : {5, 9, 17}) {
        const UniformGrid grid = make_grid(big_n, Indicator::I0);
        const std::vector<double> f = random_values(big_n, 40000u + big_n);
        const SampleSet samples(grid, f);
        const TrigSpline s =
            build_spline(samples, spec_of(FactorKind::Nu1, 3, Indicator::I0, Indicator::I0));
        const PeriodicPolySpline cub = build_cubic_periodic(samples);
        const double tol = 1e-8 * (1.0 + max_abs(f));
        const std::vector<double> vals = s.eval_uniform(1000);
        for (int i = 0; i < 1000; ++i) {
            const double err =
                std::abs(vals[static_cast<size_t>(i)] - cub.eval(kTau * i / 1000.0));
            worst_ratio = std::max(worst_ratio, err / tol);
        }
    }
    const double elapsed = seconds_since(t0);
    detail = "worst err/tol = " + fmt(worst_ratio) +
             ", elapsed = " + fmt(elapsed) + " s (< 10)";
    return worst_ratio <= 1.0 && elapsed < 10.0;
}

bool c05_moments(std::string& detail) {
    double worst = 0.0;
    for (int big_n : {5, 9, 17}) {
        const UniformGrid grid = make_grid(big_n, Indicator::I0);
        std::vector<double> f(static_cast<size_t>(big_n));
        for (int j = 1; j <= big_n; ++j)
            f[static_cast<size_t>(j - 1)] = std::exp(std::sin(grid.node(j)));
        const SampleSet samples(grid, f);
        const std::vector<double> trig = moments_via_trigspline(samples);
        const std::vector<double> cyclic = build_cubic_periodic(samples).moments();
        const double scale = max_abs(cyclic);
        for (size_t j = 0; j < trig.size(); ++j)
            worst = std::max(worst, std::abs(trig[j] - cyclic[j]) / scale);
    }
    detail = "max relative moment gap = " + fmt(worst) + " (<= 1e-6)";
    return worst <= 1e-6;
}

bool c06_half_step_shift(std::string& detail) {
    double worst = 0.0;
    for (int big_n : {5, 9}) {
        const std::vector<double> f = random_values(big_n, 60000u + big_n);
        for (FactorKind kind : {FactorKind::Nu1, FactorKind::Nu3}) {
            const int r = 3;
            const TrigSpline s00 = build_spline(SampleSet(make_grid(big_n, Indicator::I0), f),
                                                spec_of(kind, r, Indicator::I0, Indicator::I0));
            const TrigSpline s11 = build_spline(SampleSet(make_grid(big_n, Indicator::I1), f),
                                                spec_of(kind, r, Indicator::I1, Indicator::I1));
            const TrigSpline s10 = build_spline(SampleSet(make_grid(big_n, Indicator::I0), f),
                                                spec_of(kind, r, Indicator::I1, Indicator::I0));
            const TrigSpline s01 = build_spline(SampleSet(make_grid(big_n, Indicator::I1), f),
                                                spec_of(kind, r, Indicator::I0, Indicator::I1));
            for (int q = 0; q <= r - 1; ++q) {
                const auto lhs_a = s11.eval_uniform(500, q);
                const auto rhs_a = s00.eval_uniform(500, q, -kPi / big_n);
                const auto lhs_b = s01.eval_uniform(500, q);
                const auto rhs_b = s10.eval_uniform(500, q, -kPi / big_n);
                for (size_t i = 0; i < 500; ++i) {
                    worst = std::max(worst, std::abs(lhs_a[i] - rhs_a[i]));
                    worst = std::max(worst, std::abs(lhs_b[i] - rhs_b[i]));
                }
            }
        }
    }
    detail = "sup shift mismatch = " + fmt(worst) + " (<= 1e-8)";
    return worst <= 1e-8;
}

bool c07_partition_sums(std::string& detail) {
    const int big_n = 5;
    const UniformGrid grid = make_grid(big_n, Indicator::I0);
    std::mt19937 rng(7000);
    std::uniform_real_distribution<double> dist(0.0, kTau);
    double worst0 = 0.0, worstq = 0.0;
    for (const ParamVector g : {ParamVector{1.0, 1.0, 1.0}, ParamVector{1.0, 0.5, -0.25}}) {
        const SplineSpec spec = spec_of(FactorKind::Nu1, 3, Indicator::I0, Indicator::I0, g, g);
        for (int trial = 0; trial < 100; ++trial) {
            const double t = dist(rng);
            double sum0 = 0.0;
            for (int k = 1; k <= big_n; ++k) sum0 += eval_fundamental(spec, grid, k, t);
            worst0 = std::max(worst0, std::abs(sum0 - 1.0));
            for (int q : {1, 2}) {
                double sumq = 0.0;
                for (int k = 1; k <= big_n; ++k) sumq += eval_fundamental(spec, grid, k, t, q);
                worstq = std::max(worstq, std::abs(sumq) / std::pow(big_n, q));
            }
        }
    }
    detail = "max |sum st_k - 1| = " + fmt(worst0) +
             " (<= 1e-9), max |sum st_k^(q)| / N^q = " + fmt(worstq) + " (<= 1e-7)";
    return worst0 <= 1e-9 && worstq <= 1e-7;
}

bool c08_parseval(std::string& detail) {
    double worst = 0.0;
    for (int big_n : {5, 9}) {
        for (FactorKind kind : {FactorKind::Nu1, FactorKind::Nu3}) {
            const UniformGrid grid = make_grid(big_n, Indicator::I0);
            const std::vector<double> f = random_values(big_n, 80000u + big_n);
            const TrigSpline s =
                build_spline(SampleSet(grid, f), spec_of(kind, 3, Indicator::I0, Indicator::I0));
            for (int q : {0, 1}) {
                const PowerReport report = power_spline_series(s, q);
                worst = std::max(worst, std::abs(report.series_value - report.quadrature_value) /
                                            std::abs(report.series_value));
            }
        }
    }
    detail = "max relative Parseval gap = " + fmt(worst) + " (<= 1e-6)";
    return worst <= 1e-6;
}

bool c09_power_shift(std::string& detail) {
    double worst = 0.0;
    for (const ParamVector g : {ParamVector{1.0, 1.0, 1.0}, ParamVector{1.0, 0.5, -0.25}}) {
        for (int big_n : {5, 9}) {
            const std::vector<double> f = random_values(big_n, 90000u + big_n);
            const int r = 3;
            const TrigSpline b00 = build_spline(SampleSet(make_grid(big_n, Indicator::I0), f),
                                                spec_of(FactorKind::Nu1, r, Indicator::I0, Indicator::I0, g, g));
            const TrigSpline b11 = build_spline(SampleSet(make_grid(big_n, Indicator::I1), f),
                                                spec_of(FactorKind::Nu1, r, Indicator::I1, Indicator::I1, g, g));
            const TrigSpline b01 = build_spline(SampleSet(make_grid(big_n, Indicator::I1), f),
                                                spec_of(FactorKind::Nu1, r, Indicator::I0, Indicator::I1, g, g));
            const TrigSpline b10 = build_spline(SampleSet(make_grid(big_n, Indicator::I0), f),
                                                spec_of(FactorKind::Nu1, r, Indicator::I1, Indicator::I0, g, g));
            for (int q = 0; q <= r - 1; ++q) {
                const double p00 = power_spline_series(b00, q).series_value;
                const double p11 = power_spline_series(b11, q).series_value;
                const double p01 = power_spline_series(b01, q).series_value;
                const double p10 = power_spline_series(b10, q).series_value;
                worst = std::max(worst, std::abs(p00 - p11) / std::abs(p00));
                worst = std::max(worst, std::abs(p01 - p10) / std::abs(p01));
            }
        }
    }
    detail = "max relative power-shift gap = " + fmt(worst) + " (<= 1e-8)";
    return worst <= 1e-8;
}

bool c10_r_limit(std::string& detail) {
    const int big_n = 9;
    const UniformGrid grid = make_grid(big_n, Indicator::I0);
    const std::vector<double> f = random_values(big_n, 101010);
    const FourierCoeffs c = dft_coeffs(SampleSet(grid, f));

    bool ok = true;
    double prev_sup = std::numeric_limits<double>::infinity();
    double final_sup = 0.0;
    std::vector<double> prev_power_gap(2, std::numeric_limits<double>::infinity());
    for (int r : {3, 7, 15, 25}) {
        const TrigSpline s = build_spline(SampleSet(grid, f),
                                          spec_of(FactorKind::Nu1, r, Indicator::I0, Indicator::I0));
        const std::vector<double> vals = s.eval_uniform(500);
        double sup = 0.0;
        for (int i = 0; i < 500; ++i)
            sup = std::max(sup, std::abs(vals[static_cast<size_t>(i)] -
                                         eval_trig_poly(c, kTau * i / 500.0)));
        ok = ok && sup < prev_sup;
        prev_sup = sup;
        final_sup = sup;
        for (int q : {0, 1}) {
            const double gap =
                std::abs(power_spline_series(s, q).series_value - power_trigpoly(c, q));
            ok = ok && gap < prev_power_gap[static_cast<size_t>(q)];
            prev_power_gap[static_cast<size_t>(q)] = gap;
        }
    }
    const double cap = 0.02 * max_abs(f);
    detail = "sup at r=25 is " + fmt(final_sup) + " (<= " + fmt(cap) +
             "), monotone = " + (ok ? "yes" : "no");
    return ok && final_sup <= cap;
}

bool c11_convergence(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto f = [](double t) { return std::exp(std::sin(t)); };
    const std::vector<int> ns{9, 17, 35};
    const double order3 = convergence_order(f, 3, FactorKind::Nu1, ns).order;
    const double order1 = convergence_order(f, 1, FactorKind::Nu1, ns).order;
    const double elapsed = seconds_since(t0);
    detail = "order(r=3) = " + fmt(order3) + " (4 +- 0.5), order(r=1) = " +
             fmt(order1) + " (2 +- 0.5), elapsed = " + fmt(elapsed) +
             " s (< 60)";
    return std::abs(order3 - 4.0) <= 0.5 && std::abs(order1 - 2.0) <= 0.5 && elapsed < 60.0;
}

bool c12_orthogonality(std::string& detail) {
    const UniformGrid grid = make_grid(5, Indicator::I0);
    const SplineSpec spec = spec_of(FactorKind::Nu1, 3, Indicator::I0, Indicator::I0);
    double witness = 0.0;
    try {
        witness = std::abs(orthogonality_witness(spec, grid).integral);
    } catch (const NoWitnessFound&) {
        detail = "no fundamental-spline pair above 1e-6";
        return false;
    }
    double tm_gap = 0.0;
    for (int k = 1; k <= 5; ++k) {
        for (int j = k; j <= 5; ++j) {
            const double integral =
                simpson([&](double t) { return eval_tm(grid, k, t) * eval_tm(grid, j, t); }, 1024);
            const double expected = k == j ? kTau / 5.0 : 0.0;
            tm_gap = std::max(tm_gap, std::abs(integral - expected));
        }
    }
    detail = "witness |integral| = " + fmt(witness) +
             " (> 1e-6), tm orthogonality gap = " + fmt(tm_gap) + " (<= 1e-8)";
    return witness > 1e-6 && tm_gap <= 1e-8;
}

bool c13_tail_certificate(std::string& detail) {
    double worst = 0.0;

    // certified configuration: remainder bound reaches the requested 1e-12
    {
        const int big_n = 9;
        const UniformGrid grid = make_grid(big_n, Indicator::I0);
        const std::vector<double> f = random_values(big_n, 131313);
        SplineSpec spec = spec_of(FactorKind::Nu1, 3, Indicator::I0, Indicator::I0);
        const TrigSpline a = build_spline(SampleSet(grid, f), spec);
        spec.tail.max_terms *= 2;
        const TrigSpline b = build_spline(SampleSet(grid, f), spec);
        const TailCertificate cert = a.tail_certificate(0);
        const std::vector<double> va = a.eval_uniform(200);
        const std::vector<double> vb = b.eval_uniform(200);
        const double scale = std::max(cert.scale, max_abs(va));
        for (size_t i = 0; i < va.size(); ++i)
            worst = std::max(worst,
                             std::abs(va[i] - vb[i]) / (2.0 * cert.achieved_rel_tol * scale));
    }

    // budget-capped configuration: the reported (coarser) tolerance governs
    {
        const int big_n = 5;
        const UniformGrid grid = make_grid(big_n, Indicator::I0);
        const std::vector<double> f = random_values(big_n, 141414);
        SplineSpec spec = spec_of(FactorKind::Nu1, 1, Indicator::I0, Indicator::I0);
        const TrigSpline a = build_spline(SampleSet(grid, f), spec);
        spec.tail.max_terms *= 2;
        const TrigSpline b = build_spline(SampleSet(grid, f), spec);
        const TailCertificate cert = a.tail_certificate(0);
        const std::vector<double> va = a.eval_uniform(200);
        const std::vector<double> vb = b.eval_uniform(200);
        const double scale = std::max(cert.scale, max_abs(va));
        for (size_t i = 0; i < va.size(); ++i)
            worst = std::max(worst,
                             std::abs(va[i] - vb[i]) / (2.0 * cert.achieved_rel_tol * scale));
    }

    detail = "worst |delta| / (2 tol scale) = " + fmt(worst) + " (<= 1)";
    return worst <= 1.0;
}

struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"interpolation across N, r, kinds, indicator combos", c01_interpolation},
        {"polynomial collapse for gamma = H = (1,0,0)", c02_polynomial_collapse},
        {"broken-line equivalence (Nu1, r=1)", c03_broken_line},
        {"cubic equivalence (Nu1, r=3)", c04_cubic_equivalence},
        {"moments via the trigonometric spline", c05_moments},
        {"half-step shift identities with derivatives", c06_half_step_shift},
        {"fundamental partition of unity and derivative sums", c07_partition_sums},
        {"Parseval series vs quadrature", c08_parseval},
        {"power equalities under the half-step shift", c09_power_shift},
        {"r -> infinity limit toward the trigonometric polynomial", c10_r_limit},
        {"convergence order across N", c11_convergence},
        {"non-orthogonality witness vs orthogonal tm basis", c12_orthogonality},
        {"tail truncation certificate under budget doubling", c13_tail_certificate},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %2zu. %s: %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
