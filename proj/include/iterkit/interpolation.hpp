#pragma once

#include <cstddef>
#include <vector>

#include "iterkit/samples.hpp"

namespace iterkit {

struct InterpolationRequest {
    SampleSet set;
    double x = 0.0;
    /// Newton-prefix length, 0..n. r = 0 is pure iterated interpolation,
    /// r = n is the full Newton form; every r yields the same interpolant.
    std::size_t prefix_length = 0;
    Scheme scheme = Scheme::neville;
};

/// Hybrid interpolation: Newton prefix of length r plus the iterated
/// remainder term,
///   sum_{i<r} f[x_0..x_i] * prod_{j<i}(x - x_j)
///   + (divided-difference polynomial over x_r..x_n at x) * prod_{i<r}(x - x_i),
/// with products accumulated left-to-right in index order. If x falls
/// within the collision radius of node i the stored f_i is returned
/// unchanged, so interpolation conditions hold exactly.
double interpolate(const SampleSet& set, double x, std::size_t r, Scheme scheme);

double interpolate(const InterpolationRequest& request);

/// Diagnostic sweep: entry r = interpolate(set, x, r, scheme) for r = 0..n.
std::vector<double> interpolate_all_r(const SampleSet& set, double x, Scheme scheme);

} // namespace iterkit
