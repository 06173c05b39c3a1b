#pragma once

#include <vector>

#include "trigspline/errors.hpp"

namespace trigspline {

/// Grid indicator I: I0 starts at t=0, I1 is shifted by half a step pi/N.
enum class Indicator : int { I0 = 0, I1 = 1 };

Indicator indicator_from_int(int v);

constexpr int value(Indicator i) noexcept { return static_cast<int>(i); }

/// Uniform grid of N nodes on [0, 2*pi): t_i = (2*pi*(i-1) + I*pi) / N,
/// i = 1..N, N odd. Immutable after construction.
class UniformGrid {
public:
    UniformGrid(int node_count, Indicator indicator);

    int size() const noexcept { return node_count_; }
    int harmonics() const noexcept { return (node_count_ - 1) / 2; }
    Indicator indicator() const noexcept { return indicator_; }
    double spacing() const noexcept;

    /// 1-based node access.
    double node(int i) const;
    const std::vector<double>& nodes() const noexcept { return nodes_; }

    friend bool operator==(const UniformGrid& a, const UniformGrid& b) noexcept {
        return a.node_count_ == b.node_count_ && a.indicator_ == b.indicator_;
    }

private:
    int node_count_;
    Indicator indicator_;
    std::vector<double> nodes_;
};

UniformGrid make_grid(int node_count, Indicator indicator);

/// Reduce t to [0, 2*pi). Throws NonFinite for NaN or infinity.
double wrap_to_period(double t);

} // namespace trigspline
