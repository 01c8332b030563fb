#include "iterkit/tableau.hpp"

#include <algorithm>
#include <cmath>

namespace iterkit {

namespace {

double degenerate_threshold(std::span<const double> nodes) {
    const auto [lo, hi] = std::minmax_element(nodes.begin(), nodes.end());
    return kSeparationEpsilon * std::max(1.0, *hi - *lo);
}

void validate(std::span<const double> nodes, std::span<const double> base) {
    if (nodes.empty()) {
        throw InputError("tableau needs at least one node");
    }
    if (nodes.size() != base.size()) {
        throw LengthMismatchError(nodes.size(), base.size());
    }
}

} // namespace

double neville_value(std::span<const double> nodes, std::span<const double> base, double x) {
    validate(nodes, base);
    const std::size_t m = nodes.size() - 1;
    const double threshold = degenerate_threshold(nodes);
    std::vector<double> v(base.begin(), base.end());
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 0; j + i <= m; ++j) {
            const double denom = nodes[i + j] - nodes[j];
            if (std::abs(denom) <= threshold) throw DegenerateNodesError(j, i + j);
            v[j] = (v[j] * (nodes[i + j] - x) - v[j + 1] * (nodes[j] - x)) / denom;
        }
    }
    return v[0];
}

double aitken_value(std::span<const double> nodes, std::span<const double> base, double x) {
    validate(nodes, base);
    const std::size_t m = nodes.size() - 1;
    const double threshold = degenerate_threshold(nodes);
    std::vector<double> v(base.begin(), base.end());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j <= m; ++j) {
            const double denom = nodes[j] - nodes[i];
            if (std::abs(denom) <= threshold) throw DegenerateNodesError(i, j);
            v[j] = (v[i] * (nodes[j] - x) - v[j] * (nodes[i] - x)) / denom;
        }
    }
    return v[m];
}

double tableau_value(Scheme scheme, std::span<const double> nodes,
                     std::span<const double> base, double x) {
    return scheme == Scheme::neville ? neville_value(nodes, base, x)
                                     : aitken_value(nodes, base, x);
}

Tableau neville_traced(std::span<const double> nodes, std::span<const double> base, double x) {
    validate(nodes, base);
    const std::size_t m = nodes.size() - 1;
    const double threshold = degenerate_threshold(nodes);
    Tableau trace{x, {nodes.begin(), nodes.end()}, {}, Scheme::neville};
    trace.levels.reserve(m + 1);
    std::vector<double> v(base.begin(), base.end());
    trace.levels.push_back(v);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 0; j + i <= m; ++j) {
            const double denom = nodes[i + j] - nodes[j];
            if (std::abs(denom) <= threshold) throw DegenerateNodesError(j, i + j);
            v[j] = (v[j] * (nodes[i + j] - x) - v[j + 1] * (nodes[j] - x)) / denom;
        }
        v.resize(m + 1 - i);
        trace.levels.push_back(v);
    }
    return trace;
}

Tableau aitken_traced(std::span<const double> nodes, std::span<const double> base, double x) {
    validate(nodes, base);
    const std::size_t m = nodes.size() - 1;
    const double threshold = degenerate_threshold(nodes);
    Tableau trace{x, {nodes.begin(), nodes.end()}, {}, Scheme::aitken};
    trace.levels.reserve(m + 1);
    std::vector<double> v(base.begin(), base.end());
    trace.levels.push_back(v);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j <= m; ++j) {
            const double denom = nodes[j] - nodes[i];
            if (std::abs(denom) <= threshold) throw DegenerateNodesError(i, j);
            v[j] = (v[i] * (nodes[j] - x) - v[j] * (nodes[i] - x)) / denom;
        }
        trace.levels.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.end());
    }
    return trace;
}

Tableau tableau_traced(Scheme scheme, std::span<const double> nodes,
                       std::span<const double> base, double x) {
    return scheme == Scheme::neville ? neville_traced(nodes, base, x)
                                     : aitken_traced(nodes, base, x);
}

} // namespace iterkit
