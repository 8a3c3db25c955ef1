#ifndef FLOWCERT_DOMINATORS_HPP
#define FLOWCERT_DOMINATORS_HPP

#include <cstdint>
#include <vector>

#include "flowcert/graph.hpp"

namespace flowcert {

/// Dominator tree rooted at the start vertex. idom[1] == no_vertex.
/// `pre` holds 1-based ranks of some preorder of the tree and `size` the
/// subtree sizes, so descendant tests are interval tests.
struct DominatorTree {
    std::vector<Vertex> idom;
    std::vector<std::uint32_t> pre;
    std::vector<std::uint32_t> size;

    std::size_t n() const { return idom.empty() ? 0 : idom.size() - 1; }

    /// Builds the preorder indices with children visited in ascending id.
    static DominatorTree from_idom(std::vector<Vertex> idom);

    /// Children lists, ascending.
    std::vector<std::vector<Vertex>> children() const;

    /// Depth of each vertex, root at depth 0.
    std::vector<std::uint32_t> depths() const;
};

/// Semi-dominator algorithm (path compression without balancing).
DominatorTree dominator_tree(const FlowGraph& g);

/// Vertex-removal oracle: x dominates w iff w is unreachable once x is removed.
DominatorTree dominator_tree_naive(const FlowGraph& g);

/// True iff w lies in the subtree of v (every vertex is its own descendant).
inline bool is_descendant(const DominatorTree& d, Vertex v, Vertex w) {
    return d.pre[v] <= d.pre[w] && d.pre[w] < d.pre[v] + d.size[v];
}

} // namespace flowcert

#endif
