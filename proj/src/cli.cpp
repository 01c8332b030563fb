#include "iterkit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <vector>

#include "iterkit/convergence.hpp"
#include "iterkit/differentiation.hpp"
#include "iterkit/divided_difference.hpp"
#include "iterkit/interpolation.hpp"
#include "iterkit/oracle.hpp"
#include "iterkit/quadrature.hpp"

namespace iterkit::cli {

namespace {

constexpr std::size_t kMaxDegree = 50;
constexpr int kTextDigits = 12;
constexpr int kJsonDigits = 17;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_field(std::string_view line, std::size_t token_begin, std::size_t token_end,
                   std::size_t lineno) {
    const std::string_view raw = line.substr(token_begin, token_end - token_begin);
    const std::string_view token = trim(raw);
    if (token.empty()) {
        throw ParseError(lineno, token_begin + 1, "empty field");
    }
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        const std::size_t leading = static_cast<std::size_t>(token.data() - raw.data());
        const std::size_t column =
            token_begin + leading + static_cast<std::size_t>(ptr - first) + 1;
        throw ParseError(lineno, column, "expected a decimal number, got '" +
                                             std::string(token) + "'");
    }
    return value;
}

bool is_header(std::string_view line) {
    std::string squeezed;
    for (char c : line) {
        if (c != ' ' && c != '\t') squeezed.push_back(c);
    }
    return squeezed == "x,f";
}

} // namespace

std::string format_number(double value, int significant_digits) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits, value);
    return buffer;
}

SampleSet parse_csv(std::istream& in, const std::string& name) {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<std::size_t> source_lines;
    std::string line;
    std::size_t lineno = 0;
    bool seen_rows = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string_view trimmed = trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        if (!seen_rows && is_header(trimmed)) {
            seen_rows = true;
            continue;
        }
        seen_rows = true;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw ParseError(lineno, line.size() + 1, "expected 'x,f'");
        }
        xs.push_back(parse_field(line, 0, comma, lineno));
        ys.push_back(parse_field(line, comma + 1, line.size(), lineno));
        source_lines.push_back(lineno);
    }
    if (xs.empty()) {
        throw InputError(name + ": no data rows");
    }
    try {
        return SampleSet(std::move(xs), std::move(ys));
    } catch (const DuplicateNodeError& e) {
        throw DuplicateNodeError(e.first, e.second,
                                 "lines " + std::to_string(source_lines[e.first]) + " and " +
                                     std::to_string(source_lines[e.second]) + " of " + name);
    } catch (const NonFiniteError& e) {
        throw ParseError(source_lines[e.index], 1, e.what());
    }
}

SampleSet parse_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open input file '" + path + "'");
    }
    return parse_csv(in, path);
}

namespace {

std::string command_name(Command command) {
    switch (command) {
        case Command::interp: return "interp";
        case Command::diff: return "diff";
        case Command::integrate: return "integrate";
        case Command::table: return "table";
        case Command::convergence: return "convergence";
    }
    return "";
}

struct CheckReport {
    double second_scheme = 0.0;
    double scheme_gap = 0.0;
    double oracle = 0.0;
    double oracle_gap = 0.0;
    std::optional<double> r_sweep_spread; // interp only: consistency across r
};

oracle::RationalPoly fit_oracle(const SampleSet& set) {
    std::vector<oracle::Rational> xs;
    std::vector<oracle::Rational> ys;
    xs.reserve(set.size());
    ys.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
        xs.push_back(oracle::rational_from_double(set.node(i)));
        ys.push_back(oracle::rational_from_double(set.value(i)));
    }
    return oracle::fit_interpolant(xs, ys);
}

CheckReport make_check(double primary, double secondary, double oracle_value) {
    CheckReport report;
    report.second_scheme = secondary;
    report.scheme_gap = std::abs(primary - secondary);
    report.oracle = oracle_value;
    report.oracle_gap = std::abs(primary - oracle_value);
    return report;
}

void emit_check_text(std::ostream& out, const CheckReport& report, Scheme primary) {
    const std::string other = to_string(primary == Scheme::neville ? Scheme::aitken
                                                                   : Scheme::neville);
    out << "check: " << other << " value " << format_number(report.second_scheme, kTextDigits)
        << ", gap " << format_number(report.scheme_gap, kTextDigits)
        << " (tolerance 1e-09 relative)\n";
    out << "check: oracle value " << format_number(report.oracle, kTextDigits) << ", gap "
        << format_number(report.oracle_gap, kTextDigits) << '\n';
    if (report.r_sweep_spread) {
        out << "check: prefix-length sweep spread "
            << format_number(*report.r_sweep_spread, kTextDigits) << '\n';
    }
}

std::string check_json(const CheckReport& report) {
    std::string json = "\"check\":{";
    json += "\"oracle\":" + format_number(report.oracle, kJsonDigits);
    json += ",\"oracle_gap\":" + format_number(report.oracle_gap, kJsonDigits);
    if (report.r_sweep_spread) {
        json += ",\"r_sweep_spread\":" + format_number(*report.r_sweep_spread, kJsonDigits);
    }
    json += ",\"scheme_gap\":" + format_number(report.scheme_gap, kJsonDigits);
    json += ",\"second_scheme\":" + format_number(report.second_scheme, kJsonDigits);
    json += "}";
    return json;
}

void emit_value_json(std::ostream& out, const RunConfig& config, const std::string& inputs,
                     std::size_t n, double value, const CheckReport* check) {
    out << '{';
    if (check != nullptr) out << check_json(*check) << ',';
    out << "\"command\":\"" << command_name(config.command) << "\"";
    out << ",\"inputs\":{" << inputs << "}";
    out << ",\"n\":" << n;
    out << ",\"scheme\":\"" << to_string(config.scheme) << "\"";
    out << ",\"value\":" << format_number(value, kJsonDigits);
    out << "}\n";
}

std::string rows_json(const std::vector<std::vector<double>>& rows) {
    std::string json = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) json += ',';
        json += '[';
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j > 0) json += ',';
            json += format_number(rows[i][j], kJsonDigits);
        }
        json += ']';
    }
    json += ']';
    return json;
}

Scheme other_scheme(Scheme scheme) {
    return scheme == Scheme::neville ? Scheme::aitken : Scheme::neville;
}

SampleSet load_samples(const RunConfig& config) {
    if (config.input_path.empty()) {
        throw InputError("missing --in <csv>");
    }
    SampleSet set = parse_csv(config.input_path);
    if (set.degree() > kMaxDegree) {
        throw InputError("stencil has n = " + std::to_string(set.degree()) +
                         " (limit 50); wide stencils are numerically ill-conditioned");
    }
    return set;
}

double require(const std::optional<double>& flag, const char* name) {
    if (!flag) throw InputError(std::string("missing required flag ") + name);
    return *flag;
}

void run_value_command(const RunConfig& config, std::ostream& out) {
    // every required flag is checked before any file or numeric work
    const double x = require(config.x, "--x");
    if (config.command == Command::diff && !config.derivative_order) {
        throw InputError("missing required flag --t");
    }
    if (config.command == Command::integrate) require(config.step, "--h");
    const SampleSet set = load_samples(config);

    double value = 0.0;
    double secondary = 0.0;
    oracle::Rational exact;
    std::optional<double> check_extra;
    std::string inputs;

    switch (config.command) {
        case Command::interp: {
            const std::size_t r = config.prefix_length.value_or(0);
            value = interpolate(set, x, r, config.scheme);
            if (config.check) {
                secondary = interpolate(set, x, r, other_scheme(config.scheme));
                exact = oracle::oracle_value(fit_oracle(set), oracle::rational_from_double(x));
                double spread = 0.0;
                for (double v : interpolate_all_r(set, x, config.scheme)) {
                    spread = std::max(spread, std::abs(v - value));
                }
                check_extra = spread;
            }
            inputs = "\"r\":" + std::to_string(r) + ",\"x\":" + format_number(x, kJsonDigits);
            break;
        }
        case Command::diff: {
            const std::size_t t = *config.derivative_order;
            value = derivative(set, x, t, config.scheme, config.override_order);
            if (config.check) {
                secondary = derivative(set, x, t, other_scheme(config.scheme),
                                       config.override_order);
                exact = oracle::oracle_derivative(fit_oracle(set),
                                                  oracle::rational_from_double(x), t);
            }
            inputs = "\"t\":" + std::to_string(t) + ",\"x\":" + format_number(x, kJsonDigits);
            break;
        }
        case Command::integrate: {
            const double h = require(config.step, "--h");
            value = integrate_composite(set, x, x + h, config.panels, config.scheme);
            if (config.check) {
                secondary = integrate_composite(set, x, x + h, config.panels,
                                                other_scheme(config.scheme));
                exact = oracle::oracle_integral(fit_oracle(set), oracle::rational_from_double(x),
                                                oracle::rational_from_double(h));
            }
            inputs = "\"h\":" + format_number(h, kJsonDigits) +
                     ",\"panels\":" + std::to_string(config.panels) +
                     ",\"x\":" + format_number(x, kJsonDigits);
            break;
        }
        default:
            throw InputError("internal: not a value command");
    }

    CheckReport report;
    if (config.check) {
        report = make_check(value, secondary, oracle::to_double(exact));
        report.r_sweep_spread = check_extra;
    }

    if (config.format == OutputFormat::json) {
        emit_value_json(out, config, inputs, set.degree(), value,
                        config.check ? &report : nullptr);
    } else {
        out << format_number(value, kTextDigits) << '\n';
        if (config.check) emit_check_text(out, report, config.scheme);
    }
}

void run_table_command(const RunConfig& config, std::ostream& out) {
    const double x = require(config.x, "--x");
    const SampleSet set = load_samples(config);
    const std::size_t r =
        config.prefix_length.value_or(std::min<std::size_t>(3, set.degree()));
    const NewDDTable table = render_new_dd_table(set, r, x, config.scheme);

    CheckReport report;
    if (config.check) {
        const double value = table.part2.value();
        const double secondary =
            render_new_dd_table(set, r, x, other_scheme(config.scheme)).part2.value();
        // Exact counterpart of the iterated value: the divided difference of
        // the interpolant over {x, x_0..x_{r-1}}.
        const oracle::RationalPoly poly = fit_oracle(set);
        const oracle::Rational xq = oracle::rational_from_double(x);
        std::vector<std::pair<oracle::Rational, oracle::Rational>> points;
        points.emplace_back(xq, oracle::oracle_value(poly, xq));
        for (std::size_t i = 0; i < r; ++i) {
            const oracle::Rational xi = oracle::rational_from_double(set.node(i));
            points.emplace_back(xi, oracle::rational_from_double(set.value(i)));
        }
        report = make_check(value, secondary,
                            oracle::to_double(oracle::oracle_divided_difference(points)));
    }

    if (config.format == OutputFormat::json) {
        out << '{';
        if (config.check) out << check_json(report) << ',';
        out << "\"command\":\"table\"";
        out << ",\"inputs\":{\"r\":" << r << ",\"x\":" << format_number(x, kJsonDigits) << "}";
        out << ",\"n\":" << set.degree();
        out << ",\"scheme\":\"" << to_string(config.scheme) << "\"";
        out << ",\"value\":{\"part1\":" << rows_json(table.part1)
            << ",\"part2\":" << rows_json(table.part2.levels) << "}";
        out << "}\n";
        return;
    }

    out << "new divided-difference table  (r = " << r << ", x = "
        << format_number(x, kTextDigits) << ", scheme = " << to_string(config.scheme) << ")\n";
    out << "part1: divided-difference columns f[x_0..x_{s-1}, x_j]\n";
    for (std::size_t s = 0; s < table.part1.size(); ++s) {
        out << "  order " << s + 1 << ":";
        for (double v : table.part1[s]) out << ' ' << format_number(v, kTextDigits);
        out << '\n';
    }
    out << "part2: iterated tableau over nodes x_" << r << "..x_" << set.degree() << " at x\n";
    for (std::size_t level = 0; level < table.part2.levels.size(); ++level) {
        out << "  level " << level << ":";
        for (double v : table.part2.levels[level]) out << ' ' << format_number(v, kTextDigits);
        out << '\n';
    }
    if (config.check) emit_check_text(out, report, config.scheme);
}

void run_convergence_command(const RunConfig& config, std::ostream& out) {
    if (!config.study) throw InputError("missing required flag --study");
    if (config.format == OutputFormat::json) {
        throw InputError("the convergence command emits CSV; --format json is not supported");
    }
    const double center = config.x.value_or(0.5);
    std::vector<ConvergencePoint> points;
    switch (*config.study) {
        case Study::deriv1:
            points = derivative_study(1, DerivativePlacement::superconvergent, config.scheme,
                                      center);
            break;
        case Study::deriv2:
            points = derivative_study(2, DerivativePlacement::superconvergent, config.scheme,
                                      center);
            break;
        case Study::quad:
            points = quadrature_study(config.scheme, center);
            break;
    }
    out << "h,error,order\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        out << format_number(points[i].step, kJsonDigits) << ','
            << format_number(points[i].error, kJsonDigits) << ',';
        if (i > 0) {
            const double order = std::log(points[i - 1].error / points[i].error) /
                                 std::log(points[i - 1].step / points[i].step);
            out << format_number(order, kJsonDigits);
        }
        out << '\n';
    }
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::interp:
            case Command::diff:
            case Command::integrate:
                run_value_command(config, out);
                break;
            case Command::table:
                run_table_command(config, out);
                break;
            case Command::convergence:
                run_convergence_command(config, out);
                break;
        }
        return 0;
    } catch (const NumericError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace iterkit::cli
