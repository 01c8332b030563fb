#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "iterkit/samples.hpp"

namespace iterkit {

/// Step-dependent weights combining the data moments into a panel integral:
/// gammas[k] = sum_{m=0}^{n-k} a[m] * h^{k+m+1} / (k+m+1), so
/// gammas[n] = h^{n+1}/(n+1).
struct QuadratureWeights {
    double step = 0.0;
    std::vector<double> gammas;
    std::vector<double> a;
};

/// Requires a.size() == n+1 with a[0] == 1 (BadCoefficientsError otherwise)
/// and h != 0. Powers of h accumulate by repeated multiplication in
/// ascending exponent.
QuadratureWeights gamma_coefficients(std::span<const double> a, double h, std::size_t n);

/// integral of the data's interpolant over [x, x+h]:
///   sum_{k=0}^{n} data_moments[k] * gamma_k
/// with moments at full depth k_max = n. Negative h integrates
/// right-to-left with the expected sign. x must be clear of every node.
double integrate_panel(const SampleSet& set, double x, double h, Scheme scheme);

/// Splits [lo, hi] into `panels` equal panels, applies integrate_panel with
/// x = each panel's left endpoint and h = the panel width, and sums in
/// ascending panel order. A panel whose left endpoint collides with a node
/// drops that node for that panel only (EmptyStencilError if nothing
/// remains). Reversed limits negate the result.
double integrate_composite(const SampleSet& set, double lo, double hi, std::size_t panels,
                           Scheme scheme);

} // namespace iterkit
