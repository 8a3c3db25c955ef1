#include "semidominators.hpp"

namespace flowcert::detail {

SemidominatorResult semidominators(const FlowGraph& g, bool with_pair) {
    const std::size_t n = g.n();

    // Everything below is indexed by preorder number; label[i] is the vertex.
    std::vector<std::uint32_t> pre(n + 1, 0);
    std::vector<Vertex> vertex(n + 1, 0);
    std::vector<std::uint32_t> dfs_parent(n + 1, 0);
    {
        std::uint32_t next = 0;
        std::vector<std::pair<Vertex, std::uint32_t>> stack;
        pre[1] = ++next;
        vertex[next] = 1;
        stack.push_back({1, 0});
        while (!stack.empty()) {
            auto [u, i] = stack.back();
            auto o = g.out(u);
            if (i == o.size()) {
                stack.pop_back();
                continue;
            }
            stack.back().second = i + 1;
            Vertex v = o[i];
            if (!pre[v]) {
                pre[v] = ++next;
                vertex[next] = v;
                dfs_parent[next] = pre[u];
                stack.push_back({v, 0});
            }
        }
    }

    std::vector<std::uint32_t> ancestor(dfs_parent);
    std::vector<std::uint32_t> label(n + 1), semi(n + 1), dom(n + 1, 0);
    std::vector<std::uint32_t> best(n + 1), blue(n + 1), bucket_head(n + 1, 0), bucket_next(n + 1, 0);
    for (std::uint32_t i = 0; i <= n; ++i)
        label[i] = semi[i] = best[i] = blue[i] = i;

    std::vector<std::uint32_t> path;
    // Compresses the forest path above v down to ancestors numbered > c.
    auto compress = [&](std::uint32_t v, std::uint32_t c) {
        path.clear();
        for (std::uint32_t x = v; ancestor[x] > c; x = ancestor[x])
            path.push_back(x);
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            std::uint32_t x = *it, p = ancestor[x];
            if (semi[label[p]] < semi[label[x]])
                label[x] = label[p];
            ancestor[x] = ancestor[p];
        }
    };

    for (std::uint32_t i = std::uint32_t(n); i > 1; --i) {
        for (std::uint32_t v = bucket_head[i]; v; v = bucket_next[v]) {
            compress(v, i);
            std::uint32_t u = label[v];
            dom[v] = semi[u] < semi[v] ? u : i;
            best[v] = u;
        }
        for (Vertex x : g.in(vertex[i])) {
            std::uint32_t v = pre[x];
            std::uint32_t u;
            if (v <= i) {
                u = v;
            } else {
                compress(v, i);
                u = label[v];
            }
            if (semi[u] < semi[i]) {
                semi[i] = semi[u];
                blue[i] = v;
            }
        }
        if (semi[i] != dfs_parent[i]) {
            bucket_next[i] = bucket_head[semi[i]];
            bucket_head[semi[i]] = i;
        } else {
            dom[i] = semi[i];
        }
    }
    for (std::uint32_t v = bucket_head[1]; v; v = bucket_next[v])
        dom[v] = 1;
    dom[1] = 1;
    for (std::uint32_t i = 2; i <= n; ++i)
        if (dom[i] != semi[i])
            dom[i] = dom[dom[i]];

    SemidominatorResult out;
    out.idom.assign(n + 1, no_vertex);
    for (std::uint32_t i = 2; i <= n; ++i)
        out.idom[vertex[i]] = vertex[dom[i]];

    if (with_pair) {
        // blue[i] enters i along a path realising its semi-dominator; the
        // tree parent is the other candidate. Where the dominator of i is
        // found through a vertex with smaller semi-dominator the roles swap.
        std::vector<std::uint32_t> red(dfs_parent);
        std::vector<char> swapped(n + 1, 0);
        for (std::uint32_t i = 2; i <= n; ++i) {
            if (!swapped[best[i]] && semi[best[i]] < semi[i]) {
                swapped[i] = 1;
                std::swap(red[i], blue[i]);
            } else if (blue[i] == dom[i] || red[i] == dom[i]) {
                blue[i] = red[i] = dom[i];
            }
        }
        out.blue.assign(n + 1, no_vertex);
        out.red.assign(n + 1, no_vertex);
        for (std::uint32_t i = 2; i <= n; ++i) {
            out.blue[vertex[i]] = vertex[blue[i]];
            out.red[vertex[i]] = vertex[red[i]];
        }
    }
    return out;
}

} // namespace flowcert::detail
