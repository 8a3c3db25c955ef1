#include "flowcert/graph.hpp"

#include <algorithm>
#include <deque>

#include "rng.hpp"

namespace flowcert {

void normalize(ArcSet& arcs) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

FlowGraph FlowGraph::from_external(std::size_t n, Vertex start, std::span<const Arc> arcs) {
    if (n == 0)
        throw InputError("graph must have at least one vertex");
    if (start < 1 || start > n)
        throw InputError("start vertex " + std::to_string(start) + " out of range");

    FlowGraph g;
    g.n_ = n;
    g.start_ext_ = start;
    g.arcs_.reserve(arcs.size());
    for (const Arc& a : arcs) {
        if (a.tail < 1 || a.tail > n || a.head < 1 || a.head > n)
            throw InputError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                             ") has a vertex out of range");
        if (a.tail == a.head) {
            ++g.self_loops_;
            continue;
        }
        g.arcs_.push_back({g.internal(a.tail), g.internal(a.head)});
    }
    const std::size_t before = g.arcs_.size();
    normalize(g.arcs_);
    g.duplicates_ = before - g.arcs_.size();
    g.index();

    auto seen = reachable_mask(g, 1);
    for (Vertex v = 1; v <= n; ++v)
        if (!seen[v])
            throw InputError("vertex " + std::to_string(g.external(v)) +
                             " is unreachable from the start vertex");
    return g;
}

FlowGraph FlowGraph::from_internal(const FlowGraph& like, std::span<const Arc> arcs) {
    FlowGraph g;
    g.n_ = like.n_;
    g.start_ext_ = like.start_ext_;
    g.arcs_.assign(arcs.begin(), arcs.end());
    for (const Arc& a : g.arcs_)
        if (a.tail < 1 || a.tail > g.n_ || a.head < 1 || a.head > g.n_ || a.tail == a.head)
            throw InputError("arc out of range or self-loop");
    normalize(g.arcs_);
    g.index();
    auto seen = reachable_mask(g, 1);
    for (Vertex v = 1; v <= g.n_; ++v)
        if (!seen[v])
            throw InputError("vertex " + std::to_string(g.external(v)) +
                             " is unreachable from the start vertex");
    return g;
}

void FlowGraph::index() {
    out_off_.assign(n_ + 2, 0);
    in_off_.assign(n_ + 2, 0);
    for (const Arc& a : arcs_) {
        ++out_off_[a.tail + 1];
        ++in_off_[a.head + 1];
    }
    for (std::size_t v = 1; v <= n_ + 1; ++v) {
        out_off_[v] += out_off_[v - 1];
        in_off_[v] += in_off_[v - 1];
    }
    out_adj_.assign(arcs_.size(), 0);
    in_adj_.assign(arcs_.size(), 0);
    std::vector<std::uint32_t> in_fill(in_off_.begin(), in_off_.end());
    // arcs_ is sorted by (tail, head), so both index arrays come out ascending.
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        out_adj_[i] = arcs_[i].head;
        in_adj_[in_fill[arcs_[i].head]++] = arcs_[i].tail;
    }
}

bool FlowGraph::has_arc(Vertex u, Vertex v) const {
    if (u < 1 || u > n_)
        return false;
    auto o = out(u);
    return std::binary_search(o.begin(), o.end(), v);
}

SpanningTree SpanningTree::from_parents(const FlowGraph& g, std::vector<Vertex> parent) {
    const std::size_t n = g.n();
    if (parent.size() != n + 1)
        throw InputError("parent map has wrong size");
    if (parent[1] != no_vertex)
        throw InputError("start vertex cannot have a parent");
    for (Vertex v = 2; v <= n; ++v) {
        if (parent[v] == no_vertex)
            throw InputError("vertex " + std::to_string(g.external(v)) + " has no parent");
        if (!g.has_arc(parent[v], v))
            throw InputError("tree arc (" + std::to_string(g.external(parent[v])) + "," +
                             std::to_string(g.external(v)) + ") is not an arc of the graph");
    }
    // 0 unvisited, 1 on current walk, 2 known to reach the root
    std::vector<char> state(n + 1, 0);
    state[1] = 2;
    std::vector<Vertex> walk;
    for (Vertex v = 2; v <= n; ++v) {
        Vertex x = v;
        walk.clear();
        while (state[x] == 0) {
            state[x] = 1;
            walk.push_back(x);
            x = parent[x];
        }
        if (state[x] == 1)
            throw InputError("tree contains a cycle through vertex " +
                             std::to_string(g.external(x)));
        for (Vertex w : walk)
            state[w] = 2;
    }
    SpanningTree t;
    t.parent = std::move(parent);
    return t;
}

ArcSet SpanningTree::arcs() const {
    ArcSet out;
    for (Vertex v = 2; v < parent.size(); ++v)
        out.push_back({parent[v], v});
    normalize(out);
    return out;
}

std::vector<char> reachable_mask(const FlowGraph& g, Vertex from, Vertex forbidden) {
    std::vector<char> seen(g.n() + 1, 0);
    if (from == forbidden)
        return seen;
    std::vector<Vertex> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.out(u)) {
            if (v != forbidden && !seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

std::vector<Vertex> reachable_set(const FlowGraph& g, Vertex from, std::optional<Vertex> forbidden) {
    auto seen = reachable_mask(g, from, forbidden.value_or(no_vertex));
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= g.n(); ++v)
        if (seen[v])
            out.push_back(v);
    return out;
}

SpanningTree extract_spanning_tree(const FlowGraph& g, TreeStrategy strategy, std::uint64_t seed) {
    const std::size_t n = g.n();
    std::vector<Vertex> parent(n + 1, no_vertex);
    std::vector<char> seen(n + 1, 0);
    seen[1] = 1;

    switch (strategy) {
    case TreeStrategy::bfs: {
        std::deque<Vertex> queue{1};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : g.out(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        break;
    }
    case TreeStrategy::dfs: {
        std::vector<std::pair<Vertex, std::size_t>> stack{{1, 0}};
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            auto o = g.out(u);
            if (i == o.size()) {
                stack.pop_back();
                continue;
            }
            Vertex v = o[i++];
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = u;
                stack.push_back({v, 0});
            }
        }
        break;
    }
    case TreeStrategy::random: {
        // Grow from a pool of arcs leaving the visited set, drawing uniformly.
        detail::Rng rng(seed);
        std::vector<Arc> pool;
        for (Vertex v : g.out(1))
            pool.push_back({1, v});
        while (!pool.empty()) {
            std::size_t i = rng.below(pool.size());
            Arc a = pool[i];
            pool[i] = pool.back();
            pool.pop_back();
            if (seen[a.head])
                continue;
            seen[a.head] = 1;
            parent[a.head] = a.tail;
            for (Vertex w : g.out(a.head))
                if (!seen[w])
                    pool.push_back({a.head, w});
        }
        break;
    }
    }
    return SpanningTree::from_parents(g, std::move(parent));
}

} // namespace flowcert
