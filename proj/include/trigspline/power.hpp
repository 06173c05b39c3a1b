#pragma once

#include "trigspline/spline.hpp"
#include "trigspline/trigpoly.hpp"

namespace trigspline {

/// Average power of the q-th derivative, P(f, q) = (1/pi) integral of
/// [f^(q)]^2 over the period, computed two ways: the Parseval series and a
/// Simpson quadrature of the evaluated spline. series_value = a0_term + pc + ps
/// holds exactly by construction.
struct PowerReport {
    int q = 0;
    double series_value = 0.0;
    double quadrature_value = 0.0;
    double pc = 0.0;
    double ps = 0.0;
    double a0_term = 0.0;
    double richardson_delta = 0.0; // |S(panels) - S(panels/2)| of the quadrature
};

/// P(T_n, q) = a0^2/2 [q=0] + sum k^(2q) (a_k^2 + b_k^2).
double power_trigpoly(const FourierCoeffs& c, int q);

/// Parseval power of the spline: pc/ps sum the squared spectral amplitudes
/// (each frequency omega weighted by omega^(2q)); the quadrature route
/// integrates the evaluated derivative. Requires q <= r-1.
PowerReport power_spline_series(const TrigSpline& s, int q, int quadrature_panels = 4096);

/// Half-norm {integral |f^(n)|^2}^(1/2) = sqrt(pi * P(f, n)).
double half_norm(const FourierCoeffs& c, int n);
double half_norm(const TrigSpline& s, int n);

} // namespace trigspline
