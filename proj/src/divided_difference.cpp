#include "iterkit/divided_difference.hpp"

#include <span>

namespace iterkit {

namespace {

// Highest-order divided difference over the listed points, by the standard
// recursion run in place.
double top_divided_difference(std::span<const double> xs, std::span<const double> ys) {
    std::vector<double> c(ys.begin(), ys.end());
    const std::size_t m = xs.size() - 1;
    for (std::size_t order = 1; order <= m; ++order) {
        for (std::size_t i = 0; i + order <= m; ++i) {
            c[i] = (c[i + 1] - c[i]) / (xs[i + order] - xs[i]);
        }
    }
    return c[0];
}

} // namespace

NewtonCoefficients newton_coefficients(const SampleSet& set) {
    const auto& xs = set.nodes();
    std::vector<double> c = set.values();
    NewtonCoefficients out;
    out.coeffs.reserve(set.size());
    out.coeffs.push_back(c[0]);
    for (std::size_t order = 1; order <= set.degree(); ++order) {
        for (std::size_t i = 0; i + order <= set.degree(); ++i) {
            c[i] = (c[i + 1] - c[i]) / (xs[i + order] - xs[i]);
        }
        out.coeffs.push_back(c[0]);
    }
    return out;
}

std::vector<double> dd_base_values(const SampleSet& set, std::size_t r) {
    const std::size_t n = set.degree();
    if (r > n) throw IndexOutOfRangeError("r", r, 0, n);
    std::vector<double> base;
    base.reserve(n + 1 - r);
    if (r == 0) {
        base = set.values();
        return base;
    }
    std::vector<double> xs(set.nodes().begin(), set.nodes().begin() + static_cast<std::ptrdiff_t>(r));
    std::vector<double> ys(set.values().begin(), set.values().begin() + static_cast<std::ptrdiff_t>(r));
    xs.push_back(0.0);
    ys.push_back(0.0);
    for (std::size_t j = r; j <= n; ++j) {
        xs.back() = set.node(j);
        ys.back() = set.value(j);
        base.push_back(top_divided_difference(xs, ys));
    }
    return base;
}

double dd_polynomial_evaluate(const SampleSet& set, std::size_t r, double x, Scheme scheme) {
    check_eval_point(set, x, false); // x may hit a node, but must be finite
    const std::vector<double> base = dd_base_values(set, r);
    const std::span<const double> tail(set.nodes().data() + r, set.size() - r);
    return tableau_value(scheme, tail, base, x);
}

NewDDTable render_new_dd_table(const SampleSet& set, std::size_t r, double x, Scheme scheme) {
    check_eval_point(set, x, false);
    const std::size_t n = set.degree();
    if (r < 1 || r > n) throw IndexOutOfRangeError("r", r, 1, n);
    NewDDTable table;
    table.r = r;
    table.eval_point = x;
    table.scheme = scheme;
    table.part1.reserve(r);
    for (std::size_t s = 1; s <= r; ++s) {
        table.part1.push_back(dd_base_values(set, s));
    }
    const std::span<const double> tail(set.nodes().data() + r, set.size() - r);
    table.part2 = tableau_traced(scheme, tail, table.part1.back(), x);
    return table;
}

} // namespace iterkit
