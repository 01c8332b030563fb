#pragma once

#include <cstddef>
#include <vector>

#include "iterkit/samples.hpp"
#include "iterkit/tableau.hpp"

namespace iterkit {

/// Newton-form coefficients: coeffs[i] = f[x_0, ..., x_i].
struct NewtonCoefficients {
    std::vector<double> coeffs;
};

/// Full column of the standard divided-difference table.
NewtonCoefficients newton_coefficients(const SampleSet& set);

/// The divided differences f[x_0, ..., x_{r-1}, x_j] for j = r..n, each
/// recomputed from scratch on its own r+1-point list (n is small; sharing
/// prefixes is not worth the bookkeeping). For r = 0 this is a copy of the
/// ordinates.
std::vector<double> dd_base_values(const SampleSet& set, std::size_t r);

/// Value at x of the degree-(n-r) divided-difference polynomial built by
/// iterating the tableau over nodes x_r..x_n with dd_base_values as base;
/// approximates f[x, x_0, ..., x_{r-1}]. x may hit a node.
double dd_polynomial_evaluate(const SampleSet& set, std::size_t r, double x, Scheme scheme);

/// The two-part divided-difference table: part1 holds the plain
/// divided-difference columns (column s lists f[x_0,...,x_{s-1}, x_j] for
/// j = s..n, s = 1..r); part2 is the iterated tableau over nodes x_r..x_n
/// whose base is part1's last column, evaluated at eval_point.
struct NewDDTable {
    std::size_t r = 0;
    double eval_point = 0.0;
    Scheme scheme = Scheme::neville;
    std::vector<std::vector<double>> part1;
    Tableau part2;
};

/// Requires 1 <= r <= n. Entries of part2 are numeric values at x; the
/// underlying objects are polynomials in x, which have no finite canonical
/// text form.
NewDDTable render_new_dd_table(const SampleSet& set, std::size_t r, double x, Scheme scheme);

} // namespace iterkit
