// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gravbec/cli.hpp"
#include "gravbec/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"gravbec: laser-induced 1/r interactions in Bose-Einstein condensates"};
    app.set_version_flag("--version", std::string("gravbec ") + gravbec::version);

    std::string command;
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool explain = false;

    std::ostringstream commands_help;
    commands_help << "one of:";
    for (const auto& c : gravbec::cli::command_names()) commands_help << " " << c;

    app.add_option("command", command, commands_help.str())->required();
    app.add_option("--config", config_path, "path to a key = value config file");
    app.add_option("--out", out_dir, "output directory (created if missing)");
    app.add_option("--seed", seed, "seed for sampled quantities");
    app.add_flag("--explain", explain, "print the command's config keys and exit");
    app.footer("Run 'gravbec <command> --explain' for the config keys of each command.");

    CLI11_PARSE(app, argc, argv);

    try {
        if (explain) {
            std::cout << gravbec::cli::explain(command);
            return 0;
        }
        if (config_path.empty()) {
            std::cerr << "error: --config is required (or use --explain)\n";
            return 1;
        }
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot read config file: " << config_path << "\n";
            return 1;
        }
        std::ostringstream text;
        text << in.rdbuf();

        gravbec::cli::RunConfig config;
        config.command = command;
        config.values = gravbec::cli::parse_config_text(text.str());
        config.output_dir = out_dir;
        config.seed = seed;
        return gravbec::cli::run(config, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
