// Command-line front end: loads an instance config, dispatches one
// subcommand, and prints a deterministic report (text or JSON) to stdout.
// Exit status: 0 when the command's checks pass, 1 when they fail, 2 on
// usage or instance errors.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "hopfore/report.hpp"

using namespace hopfore;

int main(int argc, char** argv) {
    CLI::App app{"exact Hopf-Ore extensions of finite abelian group algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string config_path;
    CommandOptions opt;
    bool as_json = false;
    app.add_option("--config", config_path, "instance config file")->required();
    app.add_option("--seed", opt.seed, "seed for all randomized subroutines");
    app.add_flag("--json", as_json, "emit the report as JSON");
    app.add_option("--degree", opt.degree, "degree cap override");
    app.add_flag("--oracle", opt.with_oracle, "cross-check against the brute-force oracle");
    app.add_option("--budget", opt.budget, "oracle enumeration budget override");

    auto* c_verify = app.add_subcommand("verify-hopf", "check the Hopf axioms on a basis range");
    auto* c_rank = app.add_subcommand("rank", "scan skew primitives and classify the rank");
    auto* c_prim = app.add_subcommand("primitives", "basis of (g,1)-skew-primitives up to a cap");
    std::string g_arg = "[0]";
    c_prim->add_option("--g", g_arg, "grouplike exponent vector, e.g. [1]");
    auto* c_simples = app.add_subcommand("list-simples", "representative simple modules");
    auto* c_classify = app.add_subcommand("classify", "decompose a module expression");
    std::string expr, expr_b;
    c_classify->add_option("expr", expr, "module expression")->required();
    auto* c_tensor = app.add_subcommand("tensor", "decompose a tensor product");
    c_tensor->add_option("left", expr, "left module expression")->required();
    c_tensor->add_option("right", expr_b, "right module expression")->required();
    auto* c_series = app.add_subcommand("series", "radical and socle series");
    c_series->add_option("expr", expr, "module expression")->required();
    auto* c_proj = app.add_subcommand("projectives", "projective covers of the simples");

    CLI11_PARSE(app, argc, argv);

    try {
        InstanceConfig config = load_config(config_path);
        auto t0 = std::chrono::steady_clock::now();
        Report report;
        if (app.got_subcommand(c_verify))
            report = cmd_verify_hopf(config, opt);
        else if (app.got_subcommand(c_rank))
            report = cmd_rank(config, opt);
        else if (app.got_subcommand(c_prim))
            report = cmd_primitives(config, opt, parse_uint_list(g_arg));
        else if (app.got_subcommand(c_simples))
            report = cmd_list_simples(config, opt);
        else if (app.got_subcommand(c_classify))
            report = cmd_classify(config, opt, expr);
        else if (app.got_subcommand(c_tensor))
            report = cmd_tensor(config, opt, expr, expr_b);
        else if (app.got_subcommand(c_series))
            report = cmd_series(config, opt, expr);
        else if (app.got_subcommand(c_proj))
            report = cmd_projectives(config, opt);
        auto t1 = std::chrono::steady_clock::now();
        std::cerr << "elapsed: "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  << " ms\n";
        std::cout << (as_json ? report.to_json() : report.to_text());
        return report.pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
