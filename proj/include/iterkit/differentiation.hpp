#pragma once

#include <cstddef>
#include <vector>

#include "iterkit/samples.hpp"

namespace iterkit {

/// Intermediates of one derivative estimation at an off-node point.
///
/// pole_weights[k] is the final tableau value over all nodes with base
/// values 1/(x_j - x)^k (data-independent; pole_weights[0] == 1 exactly).
/// data_moments[k] is the final with bases f(x_j)/(x_j - x)^k;
/// data_moments[0] is bit-identical to interpolate(set, x, 0, scheme).
/// a holds the inversion coefficients once a_coefficients has run:
/// a[0] = 1 and a[k] = -(a[0]*W[k] + a[1]*W[k-1] + ... + a[k-1]*W[1])
/// where W = pole_weights, so a[k] + sum_{j<k} a[j]*W[k-j] == 0 up to the
/// recursion's own rounding.
struct DerivativeWorkspace {
    double eval_point = 0.0;
    Scheme scheme = Scheme::neville;
    std::vector<double> pole_weights;
    std::vector<double> data_moments;
    std::vector<double> a;

    std::size_t depth() const { return pole_weights.size() - 1; }
};

/// Runs the tableau engine over all n+1 nodes for every inverse power
/// k = 0..k_max and stores the finals. Requires x clear of every node;
/// throws EvalPointCollisionError otherwise, OverflowError(k, j) if a base
/// value is non-finite. Inverse powers are built by repeated multiplication
/// of the reciprocal, not exp/log, so small integer cases stay exact.
DerivativeWorkspace weight_sequences(const SampleSet& set, double x, std::size_t k_max,
                                     Scheme scheme);

/// Fills ws.a with a_0..a_t (ascending k, left-to-right accumulation).
/// Throws InsufficientDepthError when the workspace holds fewer than t
/// pole weights.
void a_coefficients(DerivativeWorkspace& ws, std::size_t t);

/// t-th derivative of the data's interpolant at x:
///   t! * sum_{j=0}^{t} a[j] * data_moments[t-j].
/// Orders above the stencil degree are rejected (the truncation never
/// vanishes there) unless allow_order_above_stencil is set.
double derivative(const SampleSet& set, double x, std::size_t t, Scheme scheme,
                  bool allow_order_above_stencil = false);

/// Every order 0..t_max from one weight_sequences pass. Entry t is
/// bit-identical to the corresponding derivative() call: the per-k tableaux
/// and the coefficient recursion do not depend on t.
std::vector<double> derivative_all_orders(const SampleSet& set, double x, std::size_t t_max,
                                          Scheme scheme, bool allow_order_above_stencil = false);

} // namespace iterkit
