#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "iterkit/samples.hpp"

namespace iterkit {

/// Triangular trace of one iterated-interpolation run.
///
/// levels[0] holds the base values attached to the nodes; each later level
/// holds the next stage of iterated values; levels[m] is the single final
/// value. Under the Neville scheme level i entry j spans the contiguous
/// node window [j, j+i]; under Aitken level i entry j-i is the value that
/// reuses the prefix nodes 0..i-1 plus the free node j. Either way level i
/// has m+1-i entries and value() is the last level's only entry.
struct Tableau {
    double eval_point = 0.0;
    std::vector<double> nodes;
    std::vector<std::vector<double>> levels;
    Scheme scheme = Scheme::neville;

    double value() const { return levels.back().front(); }
};

/// Value at x of the unique degree-<=m polynomial taking base[j] at
/// nodes[j], by the two-row-determinant recursion
///   V[j..j+i] = (V[j..j+i-1]*(x[i+j]-x) - V[j+1..j+i]*(x[j]-x)) / (x[i+j]-x[j]).
/// Throws DegenerateNodesError if a denominator underflows the separation
/// threshold.
double neville_value(std::span<const double> nodes, std::span<const double> base, double x);

/// Same polynomial value via the Aitken index pattern
///   V[0..i,j] = (V[0..i]*(x[j]-x) - V[0..i-1,j]*(x[i]-x)) / (x[j]-x[i]).
double aitken_value(std::span<const double> nodes, std::span<const double> base, double x);

/// Dispatch on scheme; the hot path used by every other module.
double tableau_value(Scheme scheme, std::span<const double> nodes,
                     std::span<const double> base, double x);

/// As the *_value functions but retaining every level. The value-only
/// entry points exist because differentiation builds k+1 tableaux per call
/// and usually needs only the finals.
Tableau neville_traced(std::span<const double> nodes, std::span<const double> base, double x);
Tableau aitken_traced(std::span<const double> nodes, std::span<const double> base, double x);
Tableau tableau_traced(Scheme scheme, std::span<const double> nodes,
                       std::span<const double> base, double x);

} // namespace iterkit
