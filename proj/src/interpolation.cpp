#include "iterkit/interpolation.hpp"

#include <cmath>

#include "iterkit/divided_difference.hpp"
#include "iterkit/tableau.hpp"

namespace iterkit {

double interpolate(const SampleSet& set, double x, std::size_t r, Scheme scheme) {
    const std::size_t n = set.degree();
    if (r > n) throw IndexOutOfRangeError("r", r, 0, n);
    check_eval_point(set, x, false);

    // Hitting a node returns the stored ordinate unchanged; the formula is
    // continuous there but the short-circuit makes the interpolation
    // conditions exact.
    const double radius = set.collision_radius();
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (std::abs(set.node(i) - x) <= radius) return set.value(i);
    }

    if (r == 0) {
        return tableau_value(scheme, set.nodes(), set.values(), x);
    }

    const NewtonCoefficients prefix = newton_coefficients(set);
    double acc = 0.0;
    double product = 1.0;
    for (std::size_t i = 0; i < r; ++i) {
        acc += prefix.coeffs[i] * product;
        product *= x - set.node(i);
    }
    acc += dd_polynomial_evaluate(set, r, x, scheme) * product;
    return acc;
}

double interpolate(const InterpolationRequest& request) {
    return interpolate(request.set, request.x, request.prefix_length, request.scheme);
}

std::vector<double> interpolate_all_r(const SampleSet& set, double x, Scheme scheme) {
    std::vector<double> out;
    out.reserve(set.size());
    for (std::size_t r = 0; r <= set.degree(); ++r) {
        out.push_back(interpolate(set, x, r, scheme));
    }
    return out;
}

} // namespace iterkit
