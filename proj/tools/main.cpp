#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

using namespace graphconf;

int main(int argc, char** argv) {
    CLI::App app{"Discretized configuration spaces of colored graphs"};
    app.require_subcommand(1);
    cli::RunConfig rc;
    bool unordered = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--graph", rc.graph, "graph file (JSON)");
        sub->add_option("--n", rc.n, "number of tokens")->check(CLI::PositiveNumber);
        sub->add_flag("--unordered", unordered, "unordered configuration space");
        sub->add_option("--out", rc.out, "output file");
        sub->add_option("--cap", rc.cap, "cell-count safety cap")->check(CLI::PositiveNumber);
        sub->add_option("--threads", rc.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", rc.seed, "random seed");
        sub->add_flag("--per-cell", rc.per_cell, "list every cell");
    };
    auto* build = app.add_subcommand("build", "build the complex and write it");
    auto* analyze = app.add_subcommand("analyze", "Euler characteristic, homology, fundamental group, surfaces");
    auto* curvature = app.add_subcommand("curvature", "link condition");
    auto* manifold = app.add_subcommand("manifold", "link classification and manifold criterion");
    auto* split = app.add_subcommand("split", "decomposition graph");
    auto* plan = app.add_subcommand("plan", "shortest token motion");
    auto* cover = app.add_subcommand("cover", "induced map of a graph morphism");
    auto* dot = app.add_subcommand("export-dot", "DOT rendering");
    for (auto* sub : {build, analyze, curvature, manifold, split, plan, cover, dot}) common(sub);
    curvature->add_option("--random", rc.random, "check this many random graphs instead of --graph");
    plan->add_option("--start", rc.start, "start vertices")->delimiter(',');
    plan->add_option("--goal", rc.goal, "goal vertices")->delimiter(',');
    plan->add_flag("--simultaneous", rc.simultaneous, "count a cube crossing as one step");
    cover->add_option("--morphism", rc.morphism, "morphism file (JSON)")->required();
    dot->add_flag("--decomposition", rc.decomposition, "render the decomposition graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::exit_input_error;
    }
    rc.ordered = !unordered;

    try {
        auto& out = std::cout;
        if (build->parsed()) return cli::cmd_build(rc, out);
        if (analyze->parsed()) return cli::cmd_analyze(rc, out);
        if (curvature->parsed()) return cli::cmd_curvature(rc, out);
        if (manifold->parsed()) return cli::cmd_manifold(rc, out);
        if (split->parsed()) return cli::cmd_split(rc, out);
        if (plan->parsed()) return cli::cmd_plan(rc, out);
        if (cover->parsed()) return cli::cmd_cover(rc, out);
        if (dot->parsed()) return cli::cmd_export_dot(rc, out);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return cli::exit_input_error;
    } catch (const InvalidArgument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return cli::exit_input_error;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return cli::exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return cli::exit_input_error;
}
