#include "flowcert/lowhigh.hpp"

#include <algorithm>
#include <numeric>

#include "order_list.hpp"
#include "semidominators.hpp"

namespace flowcert {

LowHighOrder LowHighOrder::from_sequence(std::vector<Vertex> sequence) {
    LowHighOrder o;
    const std::size_t n = sequence.size();
    o.position.assign(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
        Vertex v = sequence[k];
        if (v < 1 || v > n || o.position[v] != 0)
            throw InputError("order is not a permutation of the vertices");
        o.position[v] = std::uint32_t(k + 1);
    }
    o.sequence = std::move(sequence);
    return o;
}

std::string to_string(LowHighClause clause) {
    switch (clause) {
    case LowHighClause::none: return "none";
    case LowHighClause::not_a_preorder: return "not-a-preorder";
    case LowHighClause::missing_low_arc: return "missing-low-arc";
    case LowHighClause::missing_high_arc: return "missing-high-arc";
    }
    return "unknown";
}

namespace {

// Vertices of d listed by preorder rank.
std::vector<Vertex> by_rank(const DominatorTree& d) {
    std::vector<Vertex> out(d.n() + 1, no_vertex);
    for (Vertex v = 1; v <= d.n(); ++v)
        out[d.pre[v]] = v;
    return out;
}

// Answers "ancestor of x at depth k" for a batch of (x, k) queries with one
// walk over the tree. Returns answers in query order.
std::vector<Vertex> ancestors_at_depth(const DominatorTree& d,
                                       const std::vector<std::pair<Vertex, std::uint32_t>>& queries) {
    const std::size_t n = d.n();
    std::vector<std::uint32_t> first(n + 2, 0);
    for (auto& q : queries)
        ++first[q.first + 1];
    for (std::size_t v = 1; v <= n + 1; ++v)
        first[v] += first[v - 1];
    std::vector<std::uint32_t> slot(queries.size());
    {
        std::vector<std::uint32_t> fill(first.begin(), first.end());
        for (std::uint32_t i = 0; i < queries.size(); ++i)
            slot[fill[queries[i].first]++] = i;
    }
    std::vector<Vertex> answer(queries.size(), no_vertex);
    auto kids = d.children();
    std::vector<Vertex> path;
    std::vector<std::pair<Vertex, std::size_t>> stack{{1, 0}};
    path.push_back(1);
    auto answer_for = [&](Vertex x) {
        for (std::uint32_t j = first[x]; j < first[x + 1]; ++j) {
            auto [v, k] = queries[slot[j]];
            (void)v;
            if (k < path.size())
                answer[slot[j]] = path[k];
        }
    };
    answer_for(1);
    while (!stack.empty()) {
        auto [u, i] = stack.back();
        if (i == kids[u].size()) {
            stack.pop_back();
            path.pop_back();
            continue;
        }
        stack.back().second = i + 1;
        Vertex v = kids[u][i];
        stack.push_back({v, 0});
        path.push_back(v);
        answer_for(v);
    }
    return answer;
}

// First vertex (ascending) at which `order` fails to be a preorder of d.
std::optional<Vertex> preorder_violation(const DominatorTree& d, const LowHighOrder& order) {
    const std::size_t n = d.n();
    if (order.position.size() != n + 1 || order.sequence.size() != n)
        return Vertex(n == 0 ? 0 : 1);
    if (order.position[1] != 1)
        return Vertex(1);
    std::vector<std::uint32_t> lo(n + 1), hi(n + 1);
    for (Vertex v = 1; v <= n; ++v)
        lo[v] = hi[v] = order.position[v];
    auto ranked = by_rank(d);
    for (std::size_t r = n; r >= 2; --r) {
        Vertex v = ranked[r], p = d.idom[v];
        lo[p] = std::min(lo[p], lo[v]);
        hi[p] = std::max(hi[p], hi[v]);
    }
    for (Vertex v = 1; v <= n; ++v) {
        if (v != 1 && order.position[d.idom[v]] >= order.position[v])
            return v;
        if (lo[v] != order.position[v] || hi[v] - lo[v] + 1 != d.size[v])
            return v;
    }
    return std::nullopt;
}

} // namespace

ArcSet derive_arcs(const ArcSet& arcs, const DominatorTree& d) {
    const std::size_t n = d.n();
    auto depth = d.depths();
    std::vector<std::pair<Vertex, std::uint32_t>> queries;
    std::vector<std::size_t> which;
    ArcSet out;
    out.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        auto [u, v] = arcs[i];
        if (u < 1 || u > n || v < 1 || v > n)
            throw InputError("arc out of range for the dominator tree");
        if (v == 1 || (u != v && is_descendant(d, v, u)))
            continue;
        Vertex p = d.idom[v];
        if (u == p) {
            out.push_back({u, v});
            continue;
        }
        if (!is_descendant(d, p, u))
            throw InputError("arc tail is not dominated by the head's immediate dominator");
        queries.push_back({u, depth[v]});
        which.push_back(i);
    }
    auto up = ancestors_at_depth(d, queries);
    for (std::size_t j = 0; j < queries.size(); ++j)
        out.push_back({up[j], arcs[which[j]].head});
    normalize(out);
    return out;
}

DerivedGraph derived_graph(const FlowGraph& g, const DominatorTree& d) {
    return {derive_arcs(g.arcs(), d)};
}

LowHighReport check_low_high(const FlowGraph& g, const DominatorTree& d, const LowHighOrder& order) {
    if (auto v = preorder_violation(d, order))
        return {false, *v, LowHighClause::not_a_preorder};
    for (Vertex v = 2; v <= g.n(); ++v) {
        if (g.has_arc(d.idom[v], v))
            continue;
        bool low = false, high = false;
        for (Vertex u : g.in(v)) {
            if (order.before(u, v))
                low = true;
            else if (order.before(v, u) && !is_descendant(d, v, u))
                high = true;
        }
        if (!low)
            return {false, v, LowHighClause::missing_low_arc};
        if (!high)
            return {false, v, LowHighClause::missing_high_arc};
    }
    return {};
}

void adopt_order(DominatorTree& d, const LowHighOrder& order) {
    if (auto v = preorder_violation(d, order))
        throw InputError("order is not a preorder of the dominator tree at vertex " +
                         std::to_string(*v));
    for (Vertex v = 1; v <= d.n(); ++v)
        d.pre[v] = order.position[v];
}

LowHighOrder construct_low_high(const FlowGraph& g, const DominatorTree& d) {
    const std::size_t n = g.n();
    if (d.n() != n)
        throw InternalError("dominator tree size differs from the graph");
    auto sd = detail::semidominators(g, true);
    if (sd.idom != d.idom)
        throw InternalError("dominator tree does not belong to the graph");

    // Parents of the two divergent trees, lifted into each sibling group:
    // a parent equal to d(v) becomes the group's front (blue) or back (red)
    // sentinel, any other parent becomes its ancestor among v's siblings.
    auto depth = d.depths();
    std::vector<std::pair<Vertex, std::uint32_t>> queries;
    queries.reserve(2 * n);
    for (Vertex v = 2; v <= n; ++v) {
        queries.push_back({sd.blue[v], depth[v]});
        queries.push_back({sd.red[v], depth[v]});
    }
    auto lifted = ancestors_at_depth(d, queries);

    auto kids = d.children();
    std::vector<std::uint32_t> front(n + 1, 0), back(n + 1, 0);
    std::uint32_t next_id = std::uint32_t(n) + 1;
    for (Vertex p = 1; p <= n; ++p) {
        if (!kids[p].empty()) {
            front[p] = next_id++;
            back[p] = next_id++;
        }
    }
    std::vector<std::uint32_t> low(n + 1, 0), high(n + 1, 0);
    for (Vertex v = 2; v <= n; ++v) {
        Vertex p = d.idom[v];
        Vertex b = sd.blue[v], r = sd.red[v];
        low[v] = b == p ? front[p] : lifted[2 * (v - 2)];
        high[v] = r == p ? back[p] : lifted[2 * (v - 2) + 1];
        if (low[v] == v || high[v] == v || low[v] == high[v] || low[v] == no_vertex ||
            high[v] == no_vertex)
            throw InternalError("divergent pair is inconsistent at vertex " + std::to_string(v));
    }

    detail::OrderList list(next_id);
    std::vector<std::uint32_t> up(next_id, detail::OrderList::none);
    auto find = [&](std::uint32_t x) {
        std::uint32_t root = x;
        while (up[root] != detail::OrderList::none)
            root = up[root];
        while (up[x] != detail::OrderList::none) {
            std::uint32_t nx = up[x];
            up[x] = root;
            x = nx;
        }
        return root;
    };

    // Children in the red forest of each group, ascending.
    std::vector<std::vector<Vertex>> red_kids(next_id);
    for (Vertex v = 2; v <= n; ++v)
        red_kids[high[v]].push_back(v);

    std::vector<std::vector<Vertex>> group_order(n + 1);
    std::vector<Vertex> post;
    std::vector<std::uint32_t> anchor(n + 1, 0);
    std::vector<std::pair<std::uint32_t, std::size_t>> stack;
    for (Vertex p = 1; p <= n; ++p) {
        if (kids[p].empty())
            continue;
        const std::uint32_t F = front[p], K = back[p];
        list.push_back(F);
        list.push_back(K);

        // Contract red leaves into their blue parent, in red postorder.
        post.clear();
        stack.assign(1, {K, 0});
        while (!stack.empty()) {
            auto [x, i] = stack.back();
            if (i == red_kids[x].size()) {
                stack.pop_back();
                if (x != K)
                    post.push_back(x);
                continue;
            }
            stack.back().second = i + 1;
            stack.push_back({red_kids[x][i], 0});
        }
        if (post.size() != kids[p].size())
            throw InternalError("red tree does not span the children of vertex " +
                                std::to_string(p));
        for (Vertex v : post) {
            anchor[v] = find(low[v]);
            up[v] = low[v];
        }
        // Undo in reverse: each vertex goes next to its anchor, on the side
        // facing its red parent.
        for (auto it = post.rbegin(); it != post.rend(); ++it) {
            Vertex v = *it;
            std::uint32_t a = anchor[v], r = high[v];
            if (a == r)
                throw InternalError("anchor meets red parent at vertex " + std::to_string(v));
            if (a == F || list.less(a, r))
                list.insert_after(a, v);
            else
                list.insert_before(a, v);
        }
        for (std::uint32_t x = list.next(F); x != K; x = list.next(x))
            group_order[p].push_back(x);
    }

    std::vector<Vertex> sequence;
    sequence.reserve(n);
    std::vector<std::pair<Vertex, std::size_t>> walk{{1, 0}};
    sequence.push_back(1);
    while (!walk.empty()) {
        auto [u, i] = walk.back();
        if (i == group_order[u].size()) {
            walk.pop_back();
            continue;
        }
        walk.back().second = i + 1;
        Vertex v = group_order[u][i];
        sequence.push_back(v);
        walk.push_back({v, 0});
    }
    if (sequence.size() != n)
        throw InternalError("constructed order does not cover every vertex");

    auto order = LowHighOrder::from_sequence(std::move(sequence));
    if (auto report = check_low_high(g, d, order); !report)
        throw InternalError("constructed order fails the low-high check at vertex " +
                            std::to_string(report.vertex) + " (" + to_string(report.clause) + ")");
    return order;
}

std::optional<LowHighOrder> brute_force_low_high(const FlowGraph& g, const DominatorTree& d) {
    const std::size_t n = g.n();
    if (n > 9)
        throw SizeGuardError("brute-force low-high search is limited to 9 vertices");
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), Vertex(1));
    do {
        auto order = LowHighOrder::from_sequence(seq);
        if (check_low_high(g, d, order))
            return order;
    } while (std::next_permutation(seq.begin() + 1, seq.end()));
    return std::nullopt;
}

} // namespace flowcert
