#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "iterkit/cli.hpp"

namespace {

using iterkit::cli::Command;
using iterkit::cli::OutputFormat;
using iterkit::cli::RunConfig;
using iterkit::cli::Study;

OutputFormat format_from_string(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw iterkit::InputError("unknown format '" + name + "' (expected text, json or csv)");
}

Study study_from_string(const std::string& name) {
    if (name == "deriv1") return Study::deriv1;
    if (name == "deriv2") return Study::deriv2;
    if (name == "quad") return Study::quad;
    throw iterkit::InputError("unknown study '" + name + "' (expected deriv1, deriv2 or quad)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"iterated divided-difference interpolation, numerical differentiation and "
                 "integration on arbitrary stencils"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help message and exit");

    std::string input;
    double x = 0.0;
    double h = 0.0;
    std::size_t t = 0;
    std::size_t r = 0;
    std::size_t panels = 1;
    std::string scheme = "neville";
    std::string format = "text";
    std::string study;
    bool check = false;
    bool override_order = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print this help message and exit");
        cmd->add_option("--scheme", scheme, "iteration scheme: neville or aitken");
        cmd->add_option("--format", format, "output format: text or json");
        cmd->add_flag("--check", check, "cross-check against the exact-rational oracle and "
                                        "the other scheme");
    };
    auto add_data = [&](CLI::App* cmd) {
        cmd->add_option("--in", input, "CSV file of x,f rows")->required();
        cmd->add_option("--x", x, "evaluation point")->required();
        add_common(cmd);
    };

    CLI::App* interp = app.add_subcommand("interp", "interpolate the data at x");
    add_data(interp);
    auto* interp_r = interp->add_option("--r", r, "Newton-prefix length (default 0)");

    CLI::App* diff = app.add_subcommand("diff", "estimate the t-th derivative at x");
    add_data(diff);
    diff->add_option("--t", t, "derivative order")->required();
    diff->add_flag("--override-order", override_order,
                   "allow t above the stencil degree (accuracy uncontrolled)");

    CLI::App* integrate = app.add_subcommand("integrate", "integrate the data over [x, x+h]");
    add_data(integrate);
    integrate->add_option("--h", h, "integration width (may be negative)")->required();
    integrate->add_option("--panels", panels, "number of equal panels (default 1)");

    CLI::App* table = app.add_subcommand("table", "render the two-part divided-difference table");
    add_data(table);
    auto* table_r = table->add_option("--r", r, "divided-difference order (default min(3, n))");

    CLI::App* convergence =
        app.add_subcommand("convergence", "emit an h,error,order CSV for a built-in study");
    convergence->add_option("--study", study, "deriv1, deriv2 or quad")->required();
    convergence->add_option("--x", x, "study center (default 0.5)");
    add_common(convergence);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunConfig config;
    try {
        config.scheme = iterkit::scheme_from_string(scheme);
        config.format = format_from_string(format);
        config.input_path = input;
        config.panels = panels;
        config.check = check;
        config.override_order = override_order;
        if (interp->parsed()) {
            config.command = Command::interp;
            config.x = x;
            if (interp_r->count() > 0) config.prefix_length = r;
        } else if (diff->parsed()) {
            config.command = Command::diff;
            config.x = x;
            config.derivative_order = t;
        } else if (integrate->parsed()) {
            config.command = Command::integrate;
            config.x = x;
            config.step = h;
        } else if (table->parsed()) {
            config.command = Command::table;
            config.x = x;
            if (table_r->count() > 0) config.prefix_length = r;
        } else {
            config.command = Command::convergence;
            config.study = study_from_string(study);
            if (convergence->count("--x") > 0) config.x = x;
        }
    } catch (const iterkit::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    return iterkit::cli::run(config, std::cout, std::cerr);
}
