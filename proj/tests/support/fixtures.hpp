#ifndef FLOWCERT_TESTS_FIXTURES_HPP
#define FLOWCERT_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "flowcert/flowcert.hpp"

namespace fixture {

inline const std::string star_text = "3 2\ns 1\n1 2\n1 3\n";
inline const std::string diamond_text = "4 5\ns 1\n1 2\n2 3\n1 3\n3 4\n2 4\n";
inline const std::string chain_text = "3 2\ns 1\n1 2\n2 3\n";
inline const std::string deep_text = "4 4\ns 1\n1 2\n2 3\n1 4\n3 4\n";

inline flowcert::FlowGraph star() { return flowcert::parse_flowgraph(star_text); }
inline flowcert::FlowGraph diamond() { return flowcert::parse_flowgraph(diamond_text); }
inline flowcert::FlowGraph chain() { return flowcert::parse_flowgraph(chain_text); }
inline flowcert::FlowGraph deep() { return flowcert::parse_flowgraph(deep_text); }

inline flowcert::SpanningTree tree(const flowcert::FlowGraph& g, const std::string& lines) {
    return flowcert::parse_tree(lines, g);
}

inline flowcert::SpanningTree star_tree(const flowcert::FlowGraph& g) { return tree(g, "1 2\n1 3\n"); }
inline flowcert::SpanningTree diamond_tree(const flowcert::FlowGraph& g) { return tree(g, "1 2\n2 3\n3 4\n"); }
inline flowcert::SpanningTree diamond_side_tree(const flowcert::FlowGraph& g) { return tree(g, "1 2\n1 3\n2 4\n"); }
inline flowcert::SpanningTree chain_tree(const flowcert::FlowGraph& g) { return tree(g, "1 2\n2 3\n"); }
inline flowcert::SpanningTree deep_tree(const flowcert::FlowGraph& g) { return tree(g, "1 2\n2 3\n1 4\n"); }

inline flowcert::LowHighOrder order(std::vector<flowcert::Vertex> seq) {
    return flowcert::LowHighOrder::from_sequence(std::move(seq));
}

inline std::vector<flowcert::Vertex> parents(std::initializer_list<flowcert::Vertex> tail) {
    std::vector<flowcert::Vertex> p{0, 0};
    p.insert(p.end(), tail.begin(), tail.end());
    return p;
}

} // namespace fixture

#endif
