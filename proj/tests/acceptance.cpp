// Acceptance suite: runs each contract criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exit code is the number of
// failures.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "iterkit/convergence.hpp"
#include "iterkit/differentiation.hpp"
#include "iterkit/interpolation.hpp"
#include "iterkit/oracle.hpp"
#include "iterkit/quadrature.hpp"
#include "test_support.hpp"

using namespace iterkit;
namespace orc = iterkit::oracle;
using testsupport::random_poly_case;

namespace {

int failures = 0;
int selected = 0; // 0 runs every criterion

void report(int criterion, bool pass, const std::string& detail) {
    if (selected != 0 && criterion != selected) return;
    std::printf("criterion %d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++failures;
}

double rel(double got, double want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

std::string fmt(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3g", v);
    return buffer;
}

double factorial(std::size_t t) {
    double f = 1.0;
    for (std::size_t i = 2; i <= t; ++i) f *= static_cast<double>(i);
    return f;
}

// ---- criterion 1: worked-example reproduction, 1e-12 relative ----------

void criterion_1() {
    double worst = 0.0;
    const SampleSet cube = create_sample_set({1, 2, 3}, {1, 4, 9});
    DerivativeWorkspace ws = weight_sequences(cube, 0.0, 2, Scheme::neville);
    worst = std::max(worst, rel(ws.pole_weights[1], 11.0 / 6.0));
    a_coefficients(ws, 2);
    worst = std::max(worst, rel(ws.a[0], 1.0));
    worst = std::max(worst, rel(ws.a[1], -11.0 / 6.0));
    worst = std::max(worst, rel(ws.a[2], 1.0));

    const SampleSet line = create_sample_set({1, 2}, {1, 2});
    worst = std::max(worst, rel(derivative(line, 0.0, 1, Scheme::neville), 1.0));
    worst = std::max(worst, rel(derivative(cube, 0.0, 2, Scheme::neville), 2.0));

    const std::vector<double> a = {1.0, -1.5};
    const QuadratureWeights weights = gamma_coefficients(a, 1.0, 1);
    worst = std::max(worst, rel(weights.gammas[0], 0.25));
    worst = std::max(worst, rel(weights.gammas[1], 0.5));

    worst = std::max(worst, rel(integrate_panel(line, 0.0, 1.0, Scheme::neville), 0.5));

    report(1, worst <= 1e-12, "worked examples, worst rel err " + fmt(worst));
}

// ---- criteria 2/3/4: polynomial exactness, scheme equivalence, ----------
// ---- r-independence over the same 200-case family per operation ---------

struct CampaignStats {
    double worst_interp = 0.0;
    double worst_deriv = 0.0;
    double worst_deriv_low = 0.0; // restricted to orders t <= 4
    double worst_integ = 0.0;
    std::size_t deriv_over = 0;
    std::size_t deriv_total = 0;
    double worst_scheme = 0.0;
    std::size_t scheme_over = 0;
    std::size_t scheme_total = 0;
    double worst_rind = 0.0;
};

CampaignStats run_campaign() {
    CampaignStats stats;
    std::mt19937 rng(20250810);
    std::uniform_int_distribution<int> h_num(1, 4);
    std::uniform_int_distribution<int> h_sign(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = random_poly_case(rng, 1, 8);
        const SampleSet set = c.samples();
        const orc::RationalPoly poly = c.poly();

        // interpolation
        const double interp_exact = orc::to_double(orc::oracle_value(poly, c.x_exact));
        const double interp_nev = interpolate(set, c.x, 0, Scheme::neville);
        const double interp_ait = interpolate(set, c.x, 0, Scheme::aitken);
        stats.worst_interp = std::max(stats.worst_interp, rel(interp_nev, interp_exact));
        stats.worst_scheme = std::max(stats.worst_scheme,
                                      std::abs(interp_nev - interp_ait) /
                                          (1.0 + std::abs(interp_nev)));
        ++stats.scheme_total;
        if (std::abs(interp_nev - interp_ait) > 1e-9 * (1.0 + std::abs(interp_nev))) {
            ++stats.scheme_over;
        }

        // derivatives t = 0..n
        for (std::size_t t = 0; t <= set.degree(); ++t) {
            const double exact = orc::to_double(orc::oracle_derivative(poly, c.x_exact, t));
            const double nev = derivative(set, c.x, t, Scheme::neville);
            const double ait = derivative(set, c.x, t, Scheme::aitken);
            const double err = rel(nev, exact);
            stats.worst_deriv = std::max(stats.worst_deriv, err);
            if (t <= 4) stats.worst_deriv_low = std::max(stats.worst_deriv_low, err);
            ++stats.deriv_total;
            if (err > 1e-8) ++stats.deriv_over;
            const double gap = std::abs(nev - ait) / (1.0 + std::abs(nev));
            stats.worst_scheme = std::max(stats.worst_scheme, gap);
            ++stats.scheme_total;
            if (gap > 1e-9) ++stats.scheme_over;
        }

        // single-panel integral
        const int num = (h_sign(rng) == 0 ? -1 : 1) * h_num(rng);
        const double h = num / 2.0;
        const double integ_exact =
            orc::to_double(orc::oracle_integral(poly, c.x_exact, orc::Rational(num, 2)));
        const double integ_nev = integrate_panel(set, c.x, h, Scheme::neville);
        const double integ_ait = integrate_panel(set, c.x, h, Scheme::aitken);
        stats.worst_integ = std::max(stats.worst_integ, rel(integ_nev, integ_exact));
        const double integ_gap =
            std::abs(integ_nev - integ_ait) / (1.0 + std::abs(integ_nev));
        stats.worst_scheme = std::max(stats.worst_scheme, integ_gap);
        ++stats.scheme_total;
        if (integ_gap > 1e-9) ++stats.scheme_over;

        // r-independence on the same case
        const std::vector<double> sweep = interpolate_all_r(set, c.x, Scheme::neville);
        for (double va : sweep) {
            for (double vb : sweep) {
                stats.worst_rind =
                    std::max(stats.worst_rind, std::abs(va - vb) / (1.0 + std::abs(va)));
            }
        }
    }
    return stats;
}

void criteria_2_3_4(const CampaignStats& stats) {
    const bool pass2 = stats.worst_interp <= 1e-8 && stats.worst_deriv <= 1e-8 &&
                       stats.worst_integ <= 1e-8;
    report(2, pass2,
           "polynomial exactness vs oracle at 1e-8: interp worst " + fmt(stats.worst_interp) +
               ", integral worst " + fmt(stats.worst_integ) + ", derivative worst " +
               fmt(stats.worst_deriv) + " (" + std::to_string(stats.deriv_over) + "/" +
               std::to_string(stats.deriv_total) +
               " orders over; t!*eps*|moment| cancellation floor in binary64 at high t"
               " — see README, Numerical notes)");

    const bool pass3 = stats.scheme_over == 0;
    report(3, pass3,
           "scheme equivalence at 1e-9: worst gap " + fmt(stats.worst_scheme) + " (" +
               std::to_string(stats.scheme_over) + "/" + std::to_string(stats.scheme_total) +
               " comparisons over; both pipelines sit on the same cancellation floor"
               " — see README, Numerical notes)");

    report(4, stats.worst_rind <= 1e-9,
           "r-independence at 1e-9: worst spread " + fmt(stats.worst_rind));
}

// ---- criterion 5: moment identity with oracle-exact derivatives ---------

void criterion_5() {
    std::mt19937 rng(20250811);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = random_poly_case(rng, 1, 6);
        const SampleSet set = c.samples();
        const orc::RationalPoly poly = c.poly();
        const std::size_t n = set.degree();
        const DerivativeWorkspace ws = weight_sequences(set, c.x, n, Scheme::neville);
        for (std::size_t k = 0; k <= n; ++k) {
            double sum = 0.0;
            for (std::size_t j = 0; j <= k; ++j) {
                const double df =
                    orc::to_double(orc::oracle_derivative(poly, c.x_exact, k - j));
                sum += df / factorial(k - j) * ws.pole_weights[j];
            }
            worst = std::max(worst,
                             std::abs(sum - ws.data_moments[k]) /
                                 (1.0 + std::abs(ws.data_moments[k])));
        }
    }
    report(5, worst <= 1e-9, "moment identity at 1e-9: worst rel err " + fmt(worst));
}

// ---- criterion 6: convergence orders on exp -----------------------------

void criterion_6() {
    const double d1 = least_squares_order(
        derivative_study(1, DerivativePlacement::superconvergent, Scheme::neville));
    const double d2 = least_squares_order(
        derivative_study(2, DerivativePlacement::superconvergent, Scheme::neville));
    const double q = least_squares_order(quadrature_study(Scheme::neville));
    const bool pass = d1 >= 4.5 && d2 >= 3.5 && q >= 4.5;
    report(6, pass,
           "measured orders: derivative t=1 " + fmt(d1) + " (>= 4.5), t=2 " + fmt(d2) +
               " (>= 3.5), quadrature " + fmt(q) + " (>= 4.5)");
}

// ---- criterion 7: oracle self-consistency --------------------------------

void criterion_7() {
    std::mt19937 rng(20250812);
    std::uniform_int_distribution<int> num_dist(-20, 20);
    std::uniform_int_distribution<int> den_dist(1, 8);
    bool pass = true;
    for (int trial = 0; trial < 100 && pass; ++trial) {
        const std::size_t count = 1 + rng() % 7; // n <= 6
        std::vector<orc::Rational> xs;
        std::vector<orc::Rational> ys;
        while (xs.size() < count) {
            const orc::Rational x(num_dist(rng), den_dist(rng));
            bool fresh = true;
            for (const auto& seen : xs) {
                if (seen == x) fresh = false;
            }
            if (!fresh) continue;
            xs.push_back(x);
            ys.emplace_back(num_dist(rng), den_dist(rng));
        }
        const orc::RationalPoly p = orc::fit_interpolant(xs, ys);
        for (std::size_t j = 0; j < count; ++j) {
            if (orc::oracle_value(p, xs[j]) != ys[j]) pass = false;
        }
    }
    report(7, pass, "fit_interpolant reproduces 100 rational datasets exactly");
}

// ---- criterion 8: CLI contract -------------------------------------------

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& err_path) {
    CliResult result;
    const std::string command = std::string(ITERKIT_BIN) + " " + args + " 2>" + err_path;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[512];
    while (std::fgets(buffer, sizeof(buffer), pipe) != nullptr) {
        result.out += buffer;
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
    return result;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void criterion_8() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "iterkit_acceptance";
    fs::create_directories(dir);
    const std::string quad = (dir / "quad.csv").string();
    const std::string lin = (dir / "lin.csv").string();
    const std::string err_path = (dir / "stderr.txt").string();
    std::ofstream(quad) << "x,f\n1,1\n2,4\n3,9\n";
    std::ofstream(lin) << "1,1\n2,2\n";

    bool pass = true;
    std::string detail;

    const CliResult diff = run_cli("diff --in " + quad + " --x 0 --t 2", err_path);
    if (diff.code != 0 || diff.out != "2\n") {
        pass = false;
        detail += " diff got code " + std::to_string(diff.code) + " out '" + diff.out + "';";
    }

    const CliResult integ = run_cli("integrate --in " + lin + " --x 0 --h 1", err_path);
    if (integ.code != 0 || integ.out != "0.5\n") {
        pass = false;
        detail += " integrate got code " + std::to_string(integ.code) + " out '" + integ.out +
                  "';";
    }

    const CliResult collide = run_cli("diff --in " + quad + " --x 1 --t 1", err_path);
    const std::string err_text = slurp(err_path);
    if (collide.code != 3 || !collide.out.empty() ||
        err_text.find("node 0") == std::string::npos) {
        pass = false;
        detail += " collision got code " + std::to_string(collide.code) + " err '" + err_text +
                  "';";
    }

    report(8, pass, detail.empty() ? "CLI examples byte-exact with exit codes 0/0/3" : detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) selected = std::atoi(argv[1]);
    if (selected == 0 || selected == 1) criterion_1();
    if (selected == 0 || (selected >= 2 && selected <= 4)) criteria_2_3_4(run_campaign());
    if (selected == 0 || selected == 5) criterion_5();
    if (selected == 0 || selected == 6) criterion_6();
    if (selected == 0 || selected == 7) criterion_7();
    if (selected == 0 || selected == 8) criterion_8();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
    } else {
        std::printf("all criteria passed\n");
    }
    return failures;
}
