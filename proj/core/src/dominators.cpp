#include "flowcert/dominators.hpp"

#include "semidominators.hpp"

namespace flowcert {

std::vector<std::vector<Vertex>> DominatorTree::children() const {
    std::vector<std::vector<Vertex>> kids(idom.size());
    for (Vertex v = 2; v < idom.size(); ++v)
        kids[idom[v]].push_back(v);
    return kids;
}

std::vector<std::uint32_t> DominatorTree::depths() const {
    std::vector<std::uint32_t> depth(idom.size(), 0);
    // Parents precede children in `pre`, so walk vertices in that order.
    std::vector<Vertex> by_rank(idom.size());
    for (Vertex v = 1; v < idom.size(); ++v)
        by_rank[pre[v]] = v;
    for (std::size_t r = 2; r < idom.size(); ++r)
        depth[by_rank[r]] = depth[idom[by_rank[r]]] + 1;
    return depth;
}

DominatorTree DominatorTree::from_idom(std::vector<Vertex> idom) {
    DominatorTree d;
    d.idom = std::move(idom);
    const std::size_t n = d.n();
    d.pre.assign(n + 1, 0);
    d.size.assign(n + 1, 1);
    if (n == 0)
        return d;
    auto kids = d.children();
    std::vector<std::pair<Vertex, std::size_t>> stack{{1, 0}};
    std::uint32_t next = 0;
    d.pre[1] = ++next;
    while (!stack.empty()) {
        auto [u, i] = stack.back();
        if (i == kids[u].size()) {
            stack.pop_back();
            if (!stack.empty())
                d.size[stack.back().first] += d.size[u];
            continue;
        }
        stack.back().second = i + 1;
        Vertex v = kids[u][i];
        d.pre[v] = ++next;
        stack.push_back({v, 0});
    }
    if (next != n)
        throw InternalError("immediate-dominator map is not a tree rooted at the start vertex");
    return d;
}

DominatorTree dominator_tree(const FlowGraph& g) {
    return DominatorTree::from_idom(detail::semidominators(g, false).idom);
}

DominatorTree dominator_tree_naive(const FlowGraph& g) {
    const std::size_t n = g.n();
    // dominated[x][w]: x dominates w
    std::vector<std::vector<char>> dominated(n + 1);
    std::vector<std::uint32_t> count(n + 1, 0);
    for (Vertex x = 1; x <= n; ++x) {
        auto seen = reachable_mask(g, 1, x == 1 ? no_vertex : x);
        dominated[x].assign(n + 1, 0);
        for (Vertex w = 1; w <= n; ++w) {
            if (w == x || (x != 1 && !seen[w]) || x == 1) {
                dominated[x][w] = 1;
                ++count[w];
            }
        }
    }
    // The immediate dominator is the proper dominator with the most dominators.
    std::vector<Vertex> idom(n + 1, no_vertex);
    for (Vertex w = 2; w <= n; ++w) {
        Vertex pick = no_vertex;
        for (Vertex x = 1; x <= n; ++x)
            if (x != w && dominated[x][w] && (pick == no_vertex || count[x] > count[pick]))
                pick = x;
        idom[w] = pick;
    }
    return DominatorTree::from_idom(std::move(idom));
}

} // namespace flowcert
