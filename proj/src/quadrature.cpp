#include "iterkit/quadrature.hpp"

#include <cmath>

#include "iterkit/differentiation.hpp"

namespace iterkit {

QuadratureWeights gamma_coefficients(std::span<const double> a, double h, std::size_t n) {
    if (a.size() != n + 1) {
        throw BadCoefficientsError("expected " + std::to_string(n + 1) +
                                   " coefficients, got " + std::to_string(a.size()));
    }
    if (a[0] != 1.0) {
        throw BadCoefficientsError("leading coefficient must be 1");
    }
    if (h == 0.0 || !std::isfinite(h)) {
        throw InputError("step h must be finite and nonzero");
    }
    QuadratureWeights weights;
    weights.step = h;
    weights.a.assign(a.begin(), a.end());
    weights.gammas.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        double power = h;
        for (std::size_t i = 0; i < k; ++i) power *= h;
        double sum = 0.0;
        for (std::size_t m = 0; m + k <= n; ++m) {
            sum += a[m] * power / static_cast<double>(k + m + 1);
            power *= h;
        }
        weights.gammas.push_back(sum);
    }
    return weights;
}

double integrate_panel(const SampleSet& set, double x, double h, Scheme scheme) {
    if (h == 0.0 || !std::isfinite(h)) {
        throw InputError("step h must be finite and nonzero");
    }
    const std::size_t n = set.degree();
    DerivativeWorkspace ws = weight_sequences(set, x, n, scheme);
    a_coefficients(ws, n);
    const QuadratureWeights weights = gamma_coefficients(ws.a, h, n);
    double sum = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        sum += ws.data_moments[k] * weights.gammas[k];
    }
    return sum;
}

double integrate_composite(const SampleSet& set, double lo, double hi, std::size_t panels,
                           Scheme scheme) {
    if (panels < 1) throw InputError("panel count must be at least 1");
    if (!(std::isfinite(lo) && std::isfinite(hi))) {
        throw InputError("integration limits must be finite");
    }
    if (lo == hi) throw InputError("integration limits must differ");
    if (lo > hi) return -integrate_composite(set, hi, lo, panels, scheme);

    const double width = (hi - lo) / static_cast<double>(panels);
    const double radius = set.collision_radius();
    double total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double left = lo + static_cast<double>(p) * width;
        // A panel whose left endpoint sits on a node loses that node for
        // this panel only; nudging the endpoint would change the integral.
        std::size_t hit = set.size();
        double best = radius;
        for (std::size_t j = 0; j < set.size(); ++j) {
            const double dist = std::abs(set.node(j) - left);
            if (dist <= best) {
                best = dist;
                hit = j;
            }
        }
        if (hit < set.size()) {
            total += integrate_panel(set.without_node(hit), left, width, scheme);
        } else {
            total += integrate_panel(set, left, width, scheme);
        }
    }
    return total;
}

} // namespace iterkit
