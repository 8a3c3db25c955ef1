#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

#include "flowcert/graph.hpp"

namespace flowcert {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> fields;
};

// Non-empty, non-comment lines split on blanks.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;

        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || raw[first] == '#')
            continue;
        Line line{number, {}};
        std::size_t i = first;
        while (i < raw.size()) {
            std::size_t j = raw.find_first_of(" \t\r", i);
            if (j == std::string_view::npos)
                j = raw.size();
            if (j > i)
                line.fields.push_back(raw.substr(i, j - i));
            i = raw.find_first_not_of(" \t\r", j);
            if (i == std::string_view::npos)
                break;
        }
        lines.push_back(std::move(line));
        if (end == text.size())
            break;
    }
    return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
    throw InputError("line " + std::to_string(line.number) + ": " + what);
}

std::uint64_t number_field(const Line& line, std::string_view field) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        fail(line, "expected a non-negative integer, got '" + std::string(field) + "'");
    return value;
}

Arc arc_line(const Line& line, std::size_t n) {
    if (line.fields.size() != 2)
        fail(line, "expected '<tail> <head>'");
    std::uint64_t u = number_field(line, line.fields[0]);
    std::uint64_t v = number_field(line, line.fields[1]);
    if (u < 1 || u > n || v < 1 || v > n)
        fail(line, "vertex id out of range [1, " + std::to_string(n) + "]");
    return {Vertex(u), Vertex(v)};
}

// Arcs relabelled to external ids and sorted there.
std::vector<Arc> external_sorted(const FlowGraph& g, const ArcSet& arcs) {
    std::vector<Arc> out;
    out.reserve(arcs.size());
    for (Arc a : arcs)
        out.push_back({g.external(a.tail), g.external(a.head)});
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_line(Arc a) {
    return std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
}

} // namespace

FlowGraph parse_flowgraph(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty())
        throw InputError("empty graph file");
    const Line& header = lines[0];
    if (header.fields.size() != 2)
        fail(header, "expected '<n> <m>'");
    std::uint64_t n = number_field(header, header.fields[0]);
    std::uint64_t m = number_field(header, header.fields[1]);
    if (n < 1 || n > 0xFFFFFFF0u)
        fail(header, "vertex count out of range");
    if (lines.size() < 2)
        throw InputError("missing start line 's <vertex>'");
    const Line& sline = lines[1];
    if (sline.fields.size() != 2 || sline.fields[0] != "s")
        fail(sline, "expected 's <vertex>'");
    std::uint64_t s = number_field(sline, sline.fields[1]);
    if (s < 1 || s > n)
        fail(sline, "start vertex out of range");
    if (lines.size() - 2 != m)
        throw InputError("header declares " + std::to_string(m) + " arcs but file has " +
                         std::to_string(lines.size() - 2));
    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (std::size_t i = 2; i < lines.size(); ++i)
        arcs.push_back(arc_line(lines[i], n));
    return FlowGraph::from_external(n, Vertex(s), arcs);
}

SpanningTree parse_tree(std::string_view text, const FlowGraph& g) {
    auto lines = content_lines(text);
    const std::size_t n = g.n();
    if (lines.size() != n - 1)
        throw InputError("tree must have " + std::to_string(n - 1) + " arcs, file has " +
                         std::to_string(lines.size()));
    std::vector<Vertex> parent(n + 1, no_vertex);
    for (const Line& line : lines) {
        Arc a = arc_line(line, n);
        Vertex u = g.internal(a.tail), v = g.internal(a.head);
        if (!g.has_arc(u, v))
            fail(line, "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                           ") is not an arc of the graph");
        if (v == 1)
            fail(line, "the start vertex cannot have a parent");
        if (parent[v] != no_vertex)
            fail(line, "vertex " + std::to_string(a.head) + " has two parents");
        parent[v] = u;
    }
    return SpanningTree::from_parents(g, std::move(parent));
}

ArcSet parse_arcset(std::string_view text, const FlowGraph& g) {
    auto lines = content_lines(text);
    if (lines.empty())
        throw InputError("empty arc-set file");
    const Line& header = lines[0];
    if (header.fields.size() != 1)
        fail(header, "expected the arc count");
    std::uint64_t k = number_field(header, header.fields[0]);
    if (lines.size() - 1 != k)
        throw InputError("arc-set declares " + std::to_string(k) + " arcs but file has " +
                         std::to_string(lines.size() - 1));
    ArcSet arcs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        Arc a = arc_line(lines[i], g.n());
        Arc in{g.internal(a.tail), g.internal(a.head)};
        if (!g.has_arc(in.tail, in.head))
            fail(lines[i], "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                               ") is not an arc of the graph");
        arcs.push_back(in);
    }
    normalize(arcs);
    return arcs;
}

std::string serialize(const FlowGraph& g, const SpanningTree* tree, Format format) {
    std::string out;
    auto arcs = external_sorted(g, g.arcs());
    if (format == Format::edgelist) {
        out += std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
        out += "s " + std::to_string(g.external_start()) + "\n";
        for (Arc a : arcs)
            out += to_line(a);
        return out;
    }
    out += "digraph flowgraph {\n";
    out += "  " + std::to_string(g.external_start()) + " [shape=doublecircle];\n";
    for (Arc a : arcs) {
        out += "  " + std::to_string(a.tail) + " -> " + std::to_string(a.head);
        if (tree && tree->parent[g.internal(a.head)] == g.internal(a.tail))
            out += " [style=bold]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

std::string serialize_tree(const FlowGraph& g, const SpanningTree& tree) {
    std::string out;
    for (Arc a : external_sorted(g, tree.arcs()))
        out += to_line(a);
    return out;
}

std::string serialize_arcset(const FlowGraph& g, const ArcSet& arcs) {
    std::string out = std::to_string(arcs.size()) + "\n";
    for (Arc a : external_sorted(g, arcs))
        out += to_line(a);
    return out;
}

} // namespace flowcert
