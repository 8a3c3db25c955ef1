#include "flowcert/divergent.hpp"

#include <algorithm>

namespace flowcert {

namespace {

template <class Usable>
TreePair build(const FlowGraph& g, const DominatorTree& d, const LowHighOrder& order, Usable usable) {
    const std::size_t n = g.n();
    TreePair pair;
    pair.b.assign(n + 1, no_vertex);
    pair.r.assign(n + 1, no_vertex);
    for (std::size_t k = 1; k < order.sequence.size(); ++k) {
        Vertex v = order.sequence[k];
        Vertex p = d.idom[v];
        if (g.has_arc(p, v) && usable(p, v)) {
            pair.b[v] = pair.r[v] = p;
            continue;
        }
        Vertex u = no_vertex, w = no_vertex;
        for (Vertex x : g.in(v)) {
            if (!usable(x, v))
                continue;
            if (order.before(x, v)) {
                if (u == no_vertex || order.before(u, x))
                    u = x;
            } else if (!is_descendant(d, v, x)) {
                if (w == no_vertex || order.before(x, w))
                    w = x;
            }
        }
        if (u == no_vertex || w == no_vertex)
            throw ChoiceUnavailable(v);
        pair.b[v] = u;
        pair.r[v] = w;
    }
    return pair;
}

// Root path of v in a parent map, or empty if it does not reach 1 in n steps.
bool root_path(const std::vector<Vertex>& parent, Vertex v, std::size_t n, std::vector<Vertex>& out) {
    out.clear();
    for (std::size_t steps = 0; steps <= n; ++steps) {
        out.push_back(v);
        if (v == 1)
            return true;
        v = parent[v];
        if (v == no_vertex)
            return false;
    }
    return false;
}

} // namespace

TreePair build_divergent_trees(const FlowGraph& g, const DominatorTree& d, const LowHighOrder& order) {
    return build(g, d, order, [](Vertex, Vertex) { return true; });
}

TreePair build_divergent_trees(const FlowGraph& g, const DominatorTree& d, const LowHighOrder& order,
                               const ArcSet& allowed) {
    for (Arc a : allowed)
        if (!g.has_arc(a.tail, a.head))
            throw InputError("allowed arc is not an arc of the graph");
    return build(g, d, order, [&](Vertex u, Vertex v) {
        return std::binary_search(allowed.begin(), allowed.end(), Arc{u, v});
    });
}

DivergenceReport check_divergent(const FlowGraph& g, const DominatorTree& d, const TreePair& pair) {
    const std::size_t n = g.n();
    if (pair.b.size() != n + 1 || pair.r.size() != n + 1)
        return {false, no_vertex};
    for (Vertex v = 2; v <= n; ++v)
        if (!g.has_arc(pair.b[v], v) || !g.has_arc(pair.r[v], v))
            return {false, v};

    auto depth = d.depths();
    std::vector<Vertex> stamp(n + 1, no_vertex);
    std::vector<Vertex> pb, pr;
    for (Vertex v = 1; v <= n; ++v) {
        if (!root_path(pair.b, v, n, pb) || !root_path(pair.r, v, n, pr))
            return {false, v};
        for (Vertex x : pb)
            stamp[x] = v;
        std::size_t common = 0;
        for (Vertex x : pr)
            if (stamp[x] == v)
                ++common;
        // Dominators lie on every path, so equality reduces to a count.
        if (common != depth[v] + 1)
            return {false, v};
    }
    return {};
}

} // namespace flowcert
