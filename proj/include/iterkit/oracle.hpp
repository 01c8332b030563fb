#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "iterkit/errors.hpp"

namespace iterkit::oracle {

// Exact-arithmetic reference implementations used to generate expected
// values and to back the property tests. Deliberately naive and kept apart
// from the core tableaux: the interpolant comes from a fraction-free solve
// of the raw Vandermonde system, so no algorithmic idea is shared with the
// code it checks. Desk scale only (n up to ~10).

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion: every finite double is m * 2^e.
Rational rational_from_double(double value);
double to_double(const Rational& value);

/// Polynomial with exact rational coefficients in the monomial basis,
/// ascending degree, trailing zeros trimmed.
struct RationalPoly {
    std::vector<Rational> coefficients;

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    void trim();
};

/// Exact interpolant through (nodes[j], values[j]): solves the Vandermonde
/// system by fraction-free (Bareiss) elimination after clearing row
/// denominators. Throws SingularSystemError on duplicate nodes.
RationalPoly fit_interpolant(const std::vector<Rational>& nodes,
                             const std::vector<Rational>& values);

Rational oracle_value(const RationalPoly& p, const Rational& x);

/// Exact t-th formal derivative of p evaluated at x (0 for t > degree).
Rational oracle_derivative(const RationalPoly& p, const Rational& x, std::size_t t);

/// Exact integral of p over [x, x+h] via the antiderivative.
Rational oracle_integral(const RationalPoly& p, const Rational& x, const Rational& h);

/// Exact recursive divided difference over the listed points, any order.
Rational oracle_divided_difference(const std::vector<std::pair<Rational, Rational>>& points);

} // namespace iterkit::oracle
