#include "iterkit/oracle.hpp"

#include <cmath>
#include <cstdint>

namespace iterkit::oracle {

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) {
        throw InputError("cannot convert a non-finite value to a rational");
    }
    if (value == 0.0) return Rational(0);
    int exponent = 0;
    const double mantissa = std::frexp(value, &exponent);
    const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
    const int shift = exponent - 53;
    BigInt numerator(scaled);
    if (shift >= 0) {
        return Rational(numerator << shift);
    }
    return Rational(numerator, BigInt(1) << -shift);
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

void RationalPoly::trim() {
    while (!coefficients.empty() && coefficients.back() == 0) {
        coefficients.pop_back();
    }
}

RationalPoly fit_interpolant(const std::vector<Rational>& nodes,
                             const std::vector<Rational>& values) {
    if (nodes.size() != values.size()) {
        throw LengthMismatchError(nodes.size(), values.size());
    }
    if (nodes.empty()) {
        throw InputError("interpolant fit needs at least one point");
    }
    const std::size_t count = nodes.size();
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            if (nodes[i] == nodes[j]) {
                throw SingularSystemError("duplicate node at indices " + std::to_string(i) +
                                          " and " + std::to_string(j));
            }
        }
    }

    // Augmented Vandermonde rows [1, x_j, ..., x_j^n | y_j], each row scaled
    // by the lcm of its denominators so Bareiss runs on integers.
    std::vector<std::vector<BigInt>> m(count, std::vector<BigInt>(count + 1));
    for (std::size_t row = 0; row < count; ++row) {
        std::vector<Rational> entries(count + 1);
        Rational power(1);
        for (std::size_t col = 0; col < count; ++col) {
            entries[col] = power;
            power *= nodes[row];
        }
        entries[count] = values[row];
        BigInt scale(1);
        for (const auto& e : entries) {
            scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(e));
        }
        for (std::size_t col = 0; col <= count; ++col) {
            const Rational scaled = entries[col] * scale;
            m[row][col] = boost::multiprecision::numerator(scaled);
        }
    }

    // Fraction-free elimination; the divisions are exact by construction and
    // the pivots are nonzero for distinct nodes.
    BigInt previous_pivot(1);
    for (std::size_t k = 0; k + 1 < count; ++k) {
        if (m[k][k] == 0) {
            throw SingularSystemError("zero pivot during elimination");
        }
        for (std::size_t i = k + 1; i < count; ++i) {
            for (std::size_t j = k + 1; j <= count; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / previous_pivot;
            }
            m[i][k] = 0;
        }
        previous_pivot = m[k][k];
    }

    RationalPoly poly;
    poly.coefficients.assign(count, Rational(0));
    for (std::size_t ii = count; ii-- > 0;) {
        Rational sum(m[ii][count]);
        for (std::size_t j = ii + 1; j < count; ++j) {
            sum -= Rational(m[ii][j]) * poly.coefficients[j];
        }
        if (m[ii][ii] == 0) {
            throw SingularSystemError("zero pivot during back substitution");
        }
        poly.coefficients[ii] = sum / Rational(m[ii][ii]);
    }
    poly.trim();
    return poly;
}

Rational oracle_value(const RationalPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.coefficients.size(); i-- > 0;) {
        acc = acc * x + p.coefficients[i];
    }
    return acc;
}

Rational oracle_derivative(const RationalPoly& p, const Rational& x, std::size_t t) {
    std::vector<Rational> c = p.coefficients;
    for (std::size_t round = 0; round < t; ++round) {
        if (c.empty()) break;
        std::vector<Rational> next;
        next.reserve(c.size() > 0 ? c.size() - 1 : 0);
        for (std::size_t i = 1; i < c.size(); ++i) {
            next.push_back(c[i] * static_cast<unsigned>(i));
        }
        c = std::move(next);
    }
    Rational acc(0);
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * x + c[i];
    }
    return acc;
}

Rational oracle_integral(const RationalPoly& p, const Rational& x, const Rational& h) {
    std::vector<Rational> anti(p.coefficients.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
        anti[i + 1] = p.coefficients[i] / static_cast<unsigned>(i + 1);
    }
    const RationalPoly antiderivative{anti};
    return oracle_value(antiderivative, x + h) - oracle_value(antiderivative, x);
}

Rational oracle_divided_difference(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) {
        throw InputError("divided difference needs at least one point");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) {
                throw DuplicateNodeError(i, j);
            }
        }
    }
    std::vector<Rational> c;
    c.reserve(points.size());
    for (const auto& point : points) c.push_back(point.second);
    const std::size_t m = points.size() - 1;
    for (std::size_t order = 1; order <= m; ++order) {
        for (std::size_t i = 0; i + order <= m; ++i) {
            c[i] = (c[i + 1] - c[i]) / (points[i + order].first - points[i].first);
        }
    }
    return c[0];
}

} // namespace iterkit::oracle
