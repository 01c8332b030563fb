#include "iterkit/differentiation.hpp"

#include <cmath>

#include "iterkit/tableau.hpp"

namespace iterkit {

namespace {

double factorial(std::size_t t) {
    double f = 1.0;
    for (std::size_t i = 2; i <= t; ++i) f *= static_cast<double>(i);
    return f;
}

double combine(const DerivativeWorkspace& ws, std::size_t t) {
    double sum = 0.0;
    for (std::size_t j = 0; j <= t; ++j) {
        sum += ws.a[j] * ws.data_moments[t - j];
    }
    return factorial(t) * sum;
}

} // namespace

DerivativeWorkspace weight_sequences(const SampleSet& set, double x, std::size_t k_max,
                                     Scheme scheme) {
    check_eval_point(set, x, true);
    const auto& nodes = set.nodes();
    const auto& values = set.values();
    const std::size_t count = set.size();

    DerivativeWorkspace ws;
    ws.eval_point = x;
    ws.scheme = scheme;
    ws.pole_weights.reserve(k_max + 1);
    ws.data_moments.reserve(k_max + 1);

    std::vector<double> reciprocal(count);
    std::vector<double> power(count, 1.0);
    std::vector<double> base(count);
    for (std::size_t j = 0; j < count; ++j) {
        reciprocal[j] = 1.0 / (nodes[j] - x);
    }

    for (std::size_t k = 0; k <= k_max; ++k) {
        if (k > 0) {
            for (std::size_t j = 0; j < count; ++j) {
                power[j] *= reciprocal[j];
                if (!std::isfinite(power[j])) throw OverflowError(k, j);
            }
        }
        if (k == 0) {
            // The all-ones base reproduces the constant exactly.
            ws.pole_weights.push_back(1.0);
        } else {
            ws.pole_weights.push_back(tableau_value(scheme, nodes, power, x));
        }
        for (std::size_t j = 0; j < count; ++j) {
            base[j] = values[j] * power[j];
            if (!std::isfinite(base[j])) throw OverflowError(k, j);
        }
        ws.data_moments.push_back(tableau_value(scheme, nodes, base, x));
    }
    return ws;
}

void a_coefficients(DerivativeWorkspace& ws, std::size_t t) {
    if (ws.depth() < t) throw InsufficientDepthError(t, ws.depth());
    ws.a.assign(1, 1.0);
    ws.a.reserve(t + 1);
    for (std::size_t k = 1; k <= t; ++k) {
        double sum = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            sum += ws.a[j] * ws.pole_weights[k - j];
        }
        ws.a.push_back(-sum);
    }
}

double derivative(const SampleSet& set, double x, std::size_t t, Scheme scheme,
                  bool allow_order_above_stencil) {
    if (t > set.degree() && !allow_order_above_stencil) {
        throw OrderExceedsStencilError(t, set.degree());
    }
    DerivativeWorkspace ws = weight_sequences(set, x, t, scheme);
    a_coefficients(ws, t);
    return combine(ws, t);
}

std::vector<double> derivative_all_orders(const SampleSet& set, double x, std::size_t t_max,
                                          Scheme scheme, bool allow_order_above_stencil) {
    if (t_max > set.degree() && !allow_order_above_stencil) {
        throw OrderExceedsStencilError(t_max, set.degree());
    }
    DerivativeWorkspace ws = weight_sequences(set, x, t_max, scheme);
    a_coefficients(ws, t_max);
    std::vector<double> out;
    out.reserve(t_max + 1);
    for (std::size_t t = 0; t <= t_max; ++t) {
        out.push_back(combine(ws, t));
    }
    return out;
}

} // namespace iterkit
