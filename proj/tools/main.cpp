#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace flowcert;

int main(int argc, char** argv) {
    CLI::App app{"Dominator certification and minimum valid arc sets for flow graphs"};
    app.require_subcommand(1);

    std::string graph, tree, arcset, restrict_to, output, format = "edgelist", tree_strategy;
    std::uint64_t seed = 0, tree_seed = 0;
    std::size_t n = 0, m = 0;

    auto* dom = app.add_subcommand("dom", "print immediate dominators");
    dom->add_option("graph", graph, "graph file")->required();

    auto* lowhigh = app.add_subcommand("lowhigh", "print a low-high order");
    lowhigh->add_option("graph", graph, "graph file")->required();

    auto* validset = app.add_subcommand("validset", "print a minimum valid arc set");
    validset->add_option("graph", graph, "graph file")->required();
    validset->add_option("tree_file", tree, "spanning-tree file");
    validset->add_option("--tree", tree, "spanning-tree file");

    auto* verify = app.add_subcommand("verify", "check that an arc set is valid");
    verify->add_option("graph", graph, "graph file")->required();
    verify->add_option("tree_file", tree, "spanning-tree file");
    verify->add_option("arcset", arcset, "arc-set file")->required();
    verify->add_option("--tree", tree, "spanning-tree file");

    auto* divergent = app.add_subcommand("divergent", "print two divergent spanning trees");
    divergent->add_option("graph", graph, "graph file")->required();
    divergent->add_option("--restrict", restrict_to, "arc-set file limiting usable arcs");

    auto* gen = app.add_subcommand("gen", "generate a random flow graph");
    gen->add_option("n", n, "vertex count")->required();
    gen->add_option("m", m, "arc count")->required();
    gen->add_option("graph_seed", seed, "graph seed")->required();
    gen->add_option("--tree", tree_strategy, "also extract a tree: bfs, dfs or random")
        ->check(CLI::IsMember({"bfs", "dfs", "random"}));
    gen->add_option("--seed", tree_seed, "seed for the random tree (default: graph seed)");
    gen->add_option("-o,--output", output, "write PREFIX.fg (or .dot) and PREFIX.tree");

    for (auto* sub : {dom, lowhigh, validset, verify, divergent, gen})
        sub->add_option("--format", format, "graph output format")
            ->check(CLI::IsMember({"edgelist", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, std::cout, std::cerr);
        return code == 0 ? 0 : cli::exit_input;
    }

    if (tree.empty() && (validset->parsed() || verify->parsed())) {
        std::cerr << "error: a spanning-tree file is required\n";
        return cli::exit_input;
    }
    if (dom->parsed())
        return cli::cmd_dom(graph, std::cout, std::cerr);
    if (lowhigh->parsed())
        return cli::cmd_lowhigh(graph, std::cout, std::cerr);
    if (validset->parsed())
        return cli::cmd_validset(graph, tree, std::cout, std::cerr);
    if (verify->parsed())
        return cli::cmd_verify(graph, tree, arcset, std::cout, std::cerr);
    if (divergent->parsed())
        return cli::cmd_divergent(graph, restrict_to.empty() ? std::nullopt
                                                             : std::optional<std::string>(restrict_to),
                                  std::cout, std::cerr);

    cli::GenOptions o;
    o.n = n;
    o.m = m;
    o.seed = seed;
    if (!tree_strategy.empty()) {
        static const std::map<std::string, TreeStrategy> names{
            {"bfs", TreeStrategy::bfs}, {"dfs", TreeStrategy::dfs}, {"random", TreeStrategy::random}};
        o.tree = names.at(tree_strategy);
    }
    if (gen->count("--seed"))
        o.tree_seed = tree_seed;
    o.format = format == "dot" ? Format::dot : Format::edgelist;
    if (!output.empty())
        o.output = output;
    return cli::cmd_gen(o, std::cout, std::cerr);
}
