// netgeom: compile step networks into region selections and inspect
// hyperplane arrangements.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "netgeom/cli.hpp"

int main(int argc, char** argv) {
    using netgeom::cli::RunConfig;

    CLI::App app{"Compile step-activation networks into hyperplane-arrangement region selections"};
    RunConfig config;
    std::string command;
    std::string output;
    std::string selection;

    const std::map<std::string, std::string> commands{
        {"compile", "network JSON -> compiled JSON"},
        {"verify", "network JSON -> sampling verification report"},
        {"mergers", "network JSON -> inseparable region pairs"},
        {"regions", "arrangement JSON -> regions with witnesses"},
        {"poset", "arrangement JSON -> intersection poset and cover edges"},
        {"gp-check", "arrangement JSON -> general position report"},
        {"plot", "2-D arrangement JSON -> SVG"},
    };
    std::string help = "one of:";
    for (const auto& [name, what] : commands) help += "\n  " + name + ": " + what;

    app.add_option("command", command, help)->required()->check(CLI::IsMember(commands));
    app.add_option("input", config.input_path, "input JSON file")->required();
    app.add_option("--tol", config.tol, "boundary tolerance")->capture_default_str();
    app.add_option("--margin", config.margin, "verify: discard samples this close to a hyperplane")
        ->capture_default_str();
    app.add_option("--box", config.box, "witness search box half-width")->capture_default_str();
    app.add_option("--sample-box", config.sample_box, "verify: sampling box half-width")->capture_default_str();
    app.add_option("--samples", config.samples, "verify: number of samples")->capture_default_str();
    app.add_option("--seed", config.seed, "verify: random seed")->capture_default_str();
    app.add_option("--output,-o", output, "write the result here instead of standard output");
    app.add_option("--selection", selection, "plot: selection JSON to shade");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : netgeom::cli::kExitInvalid;
    }

    config.command = *netgeom::cli::parse_command(command);
    if (!output.empty()) config.output_path = output;
    if (!selection.empty()) config.selection_path = selection;
    return netgeom::cli::run(config, std::cout, std::cerr);
}
