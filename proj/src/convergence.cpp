#include "iterkit/convergence.hpp"

#include <cmath>

#include "iterkit/differentiation.hpp"
#include "iterkit/quadrature.hpp"

namespace iterkit {

namespace {

// Offsets of the evaluation point from the 5-node grid center, in units of
// the spacing h. The superconvergent ones are the central-region zeros of
// w'(s) = 5s^4 - 15s^2 + 4 and w''(s) = 20s^3 - 30s for
// w(s) = s(s^2-1)(s^2-4), the node polynomial of the stencil {-2..2}.
const double kShiftCentered = 0.5;
const double kShiftOrder1 = std::sqrt((15.0 - std::sqrt(145.0)) / 10.0);
const double kShiftOrder2 = std::sqrt(1.5);

SampleSet exp_samples(const std::vector<double>& nodes) {
    std::vector<double> values;
    values.reserve(nodes.size());
    for (double u : nodes) values.push_back(std::exp(u));
    return SampleSet(nodes, std::move(values));
}

} // namespace

double least_squares_order(const std::vector<ConvergencePoint>& points) {
    if (points.size() < 2) {
        throw InputError("order estimation needs at least two points");
    }
    std::vector<double> lx;
    std::vector<double> ly;
    lx.reserve(points.size());
    ly.reserve(points.size());
    for (const auto& p : points) {
        lx.push_back(std::log(p.step));
        ly.push_back(std::log(std::max(p.error, 1e-300)));
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(lx.size());
    my /= static_cast<double>(ly.size());
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    return num / den;
}

std::vector<ConvergencePoint> derivative_study(std::size_t order, DerivativePlacement placement,
                                               Scheme scheme, double center) {
    if (order < 1 || order > 2) {
        throw InputError("the derivative study supports orders 1 and 2");
    }
    double shift = kShiftCentered;
    if (placement == DerivativePlacement::superconvergent) {
        shift = order == 1 ? kShiftOrder1 : kShiftOrder2;
    }
    std::vector<ConvergencePoint> points;
    points.reserve(kDerivativeSteps.size());
    const double exact = std::exp(center);
    for (double h : kDerivativeSteps) {
        std::vector<double> nodes(5);
        for (std::size_t i = 0; i < 5; ++i) {
            nodes[i] = center - shift * h + (static_cast<double>(i) - 2.0) * h;
        }
        const double estimate = derivative(exp_samples(nodes), center, order, scheme);
        points.push_back({h, std::abs(estimate - exact)});
    }
    return points;
}

std::vector<ConvergencePoint> quadrature_study(Scheme scheme, double center) {
    std::vector<ConvergencePoint> points;
    points.reserve(kQuadratureSteps.size());
    for (double h : kQuadratureSteps) {
        std::vector<double> nodes(4);
        for (std::size_t i = 0; i < 4; ++i) {
            nodes[i] = center + (static_cast<double>(i) - 1.5) * (h / 3.0);
        }
        const double estimate = integrate_panel(exp_samples(nodes), center, h, scheme);
        const double exact = std::exp(center + h) - std::exp(center);
        points.push_back({h, std::abs(estimate - exact)});
    }
    return points;
}

} // namespace iterkit
