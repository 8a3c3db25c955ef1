#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flowcert/flowcert.hpp"

namespace flowcert::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw InputError("cannot write file");
}

FlowGraph load_graph(const std::string& path, std::ostream& err) {
    FlowGraph g;
    try {
        g = parse_flowgraph(read_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
    if (g.self_loops_dropped())
        err << "warning: " << path << ": dropped " << g.self_loops_dropped() << " self-loop(s)\n";
    if (g.duplicates_dropped())
        err << "warning: " << path << ": dropped " << g.duplicates_dropped() << " duplicate arc(s)\n";
    return g;
}

SpanningTree load_tree(const std::string& path, const FlowGraph& g) {
    try {
        return parse_tree(read_file(path), g);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

ArcSet load_arcset(const std::string& path, const FlowGraph& g) {
    try {
        return parse_arcset(read_file(path), g);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

template <class Body>
int guarded(std::ostream& err, Body body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

// Low-high order for g, re-checked before use.
LowHighOrder checked_order(const FlowGraph& g, const DominatorTree& d) {
    auto order = construct_low_high(g, d);
    if (auto report = check_low_high(g, d, order); !report)
        throw InternalError("low-high self-check failed at vertex " +
                            std::to_string(g.external(report.vertex)) + " (" +
                            to_string(report.clause) + ")");
    return order;
}

void print_parents(const FlowGraph& g, const std::vector<Vertex>& parent, std::ostream& out) {
    std::vector<Arc> lines;
    for (Vertex v = 2; v <= g.n(); ++v)
        lines.push_back({g.external(v), g.external(parent[v])});
    std::sort(lines.begin(), lines.end());
    for (Arc a : lines)
        out << a.tail << ' ' << a.head << '\n';
}

} // namespace

int cmd_dom(const std::string& graph, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto g = load_graph(graph, err);
        print_parents(g, dominator_tree(g).idom, out);
        return exit_ok;
    });
}

int cmd_lowhigh(const std::string& graph, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto g = load_graph(graph, err);
        auto d = dominator_tree(g);
        auto order = checked_order(g, d);
        for (Vertex v : order.sequence)
            out << g.external(v) << '\n';
        return exit_ok;
    });
}

int cmd_validset(const std::string& graph, const std::string& tree, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&] {
        auto g = load_graph(graph, err);
        auto t = load_tree(tree, g);
        auto d = dominator_tree(g);
        auto order = checked_order(g, d);
        auto arcs = compute_valid_set(g, t, d, order);
        if (arcs.size() != lower_bound(t, d))
            throw InternalError("valid set size differs from the lower bound");
        if (auto bad = first_mismatch(g, t, arcs))
            throw InternalError("computed set is not valid at vertex " +
                                std::to_string(g.external(bad->vertex)));
        out << serialize_arcset(g, arcs);
        return exit_ok;
    });
}

int cmd_verify(const std::string& graph, const std::string& tree, const std::string& arcset,
               std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto g = load_graph(graph, err);
        auto t = load_tree(tree, g);
        auto arcs = load_arcset(arcset, g);
        if (auto bad = first_mismatch(g, t, arcs)) {
            out << "invalid: vertex " << g.external(bad->vertex) << " has immediate dominator "
                << g.external(bad->in_graph) << " in the graph but " << g.external(bad->in_subgraph)
                << " in the subgraph\n";
            return exit_failed;
        }
        out << "valid\n";
        return exit_ok;
    });
}

int cmd_divergent(const std::string& graph, const std::optional<std::string>& restrict_to,
                  std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto g = load_graph(graph, err);
        auto d = dominator_tree(g);
        auto order = checked_order(g, d);
        TreePair pair;
        try {
            pair = restrict_to ? build_divergent_trees(g, d, order, load_arcset(*restrict_to, g))
                               : build_divergent_trees(g, d, order);
        } catch (const ChoiceUnavailable& e) {
            out << "choice unavailable at vertex " << g.external(e.vertex) << '\n';
            return int(exit_failed);
        }
        if (auto report = check_divergent(g, d, pair); !report)
            throw InternalError("divergence self-check failed at vertex " +
                                std::to_string(g.external(report.vertex)));
        out << "B:\n";
        print_parents(g, pair.b, out);
        out << "R:\n";
        print_parents(g, pair.r, out);
        return int(exit_ok);
    });
}

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (o.tree && !o.output && o.format == Format::edgelist)
            throw InputError("--tree with edgelist output needs --output");
        auto g = random_flowgraph(o.n, o.m, o.seed);
        std::optional<SpanningTree> t;
        if (o.tree)
            t = extract_spanning_tree(g, *o.tree, o.tree_seed.value_or(o.seed));
        const std::string text = serialize(g, t ? &*t : nullptr, o.format);
        if (!o.output) {
            out << text;
            return exit_ok;
        }
        write_file(*o.output + (o.format == Format::dot ? ".dot" : ".fg"), text);
        if (t)
            write_file(*o.output + ".tree", serialize_tree(g, *t));
        return exit_ok;
    });
}

} // namespace flowcert::cli
