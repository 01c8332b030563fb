#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "iterkit/samples.hpp"

namespace iterkit {

struct ConvergencePoint {
    double step;
    double error;
};

/// Least-squares slope of log(error) vs log(step); the measured order.
double least_squares_order(const std::vector<ConvergencePoint>& points);

/// Where the 5-node derivative stencil sits relative to the evaluation
/// point. The superconvergent placements put x at a zero of the first
/// (order 1) resp. second (order 2) derivative of the stencil node
/// polynomial, which cancels the leading error term and buys one extra
/// measured order; `centered` is the plain mid-gap placement.
enum class DerivativePlacement { centered, superconvergent };

inline constexpr std::array<double, 4> kDerivativeSteps = {0.2, 0.1, 0.05, 0.025};
inline constexpr std::array<double, 4> kQuadratureSteps = {0.4, 0.2, 0.1, 0.05};

/// Error of the order-1 or order-2 derivative of exp at `center` on 5
/// equispaced nodes of spacing h, regenerated per h, over kDerivativeSteps.
std::vector<ConvergencePoint> derivative_study(std::size_t order, DerivativePlacement placement,
                                               Scheme scheme, double center = 0.5);

/// Error of the single-panel integral of exp over [center, center+h] on 4
/// nodes of spacing h/3 straddling the left endpoint, over kQuadratureSteps.
std::vector<ConvergencePoint> quadrature_study(Scheme scheme, double center = 0.5);

} // namespace iterkit
