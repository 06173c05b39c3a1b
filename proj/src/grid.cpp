#include "trigspline/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trigspline/detail/numeric.hpp"

namespace trigspline {

Indicator indicator_from_int(int v) {
    if (v != 0 && v != 1)
        throw ValidationError("indicator must be 0 or 1, got " + std::to_string(v));
    return static_cast<Indicator>(v);
}

UniformGrid::UniformGrid(int node_count, Indicator indicator)
    : node_count_(node_count), indicator_(indicator) {
    if (node_count < 3)
        throw NodeCountTooSmall("node count must be at least 3, got " + std::to_string(node_count));
    if (node_count % 2 == 0)
        throw EvenNodeCount("node count must be odd, got " + std::to_string(node_count));
    nodes_.resize(static_cast<size_t>(node_count));
    // Closed form per node, not cumulative addition, so there is no drift.
    for (int i = 0; i < node_count; ++i)
        nodes_[static_cast<size_t>(i)] =
            std::numbers::pi_v<double> * (2 * i + value(indicator)) / node_count;
}

double UniformGrid::spacing() const noexcept {
    return detail::kTwoPi / node_count_;
}

double UniformGrid::node(int i) const {
    if (i < 1 || i > node_count_)
        throw IndexOutOfRange("node index " + std::to_string(i) + " outside 1.." +
                              std::to_string(node_count_));
    return nodes_[static_cast<size_t>(i - 1)];
}

UniformGrid make_grid(int node_count, Indicator indicator) {
    return UniformGrid(node_count, indicator);
}

double wrap_to_period(double t) {
    if (!std::isfinite(t))
        throw NonFinite("wrap_to_period requires a finite argument");
    double r = std::fmod(t, detail::kTwoPi);
    if (r < 0.0) r += detail::kTwoPi;
    if (r >= detail::kTwoPi) r = 0.0;
    return r;
}

} // namespace trigspline
