#include "flowcert/valid_set.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <cstdint>

namespace flowcert {

ValidSetCase classify(const FlowGraph& g, const SpanningTree& t, const DominatorTree& d,
                      const LowHighOrder& order, Vertex v) {
    const Vertex p = d.idom[v];
    if (t.parent[v] == p)
        return ValidSetCase::unchanged;
    if (g.has_arc(p, v))
        return ValidSetCase::idom_arc;
    return order.before(v, t.parent[v]) ? ValidSetCase::low_arc : ValidSetCase::high_arc;
}

ArcSet compute_valid_set(const FlowGraph& g, const SpanningTree& t, const DominatorTree& d,
                         const LowHighOrder& order) {
    ArcSet out;
    for (Vertex v = 2; v <= g.n(); ++v) {
        switch (classify(g, t, d, order, v)) {
        case ValidSetCase::unchanged:
            break;
        case ValidSetCase::idom_arc:
            out.push_back({d.idom[v], v});
            break;
        case ValidSetCase::low_arc: {
            if (is_descendant(d, v, t.parent[v]))
                throw InternalError("tree parent after v is a descendant of v");
            Vertex pick = no_vertex;
            for (Vertex x : g.in(v))
                if (order.before(x, v) && (pick == no_vertex || order.before(pick, x)))
                    pick = x;
            if (pick == no_vertex)
                throw NoQualifyingArc(v);
            out.push_back({pick, v});
            break;
        }
        case ValidSetCase::high_arc: {
            Vertex pick = no_vertex;
            for (Vertex x : g.in(v))
                if (order.before(v, x) && !is_descendant(d, v, x) &&
                    (pick == no_vertex || order.before(x, pick)))
                    pick = x;
            if (pick == no_vertex)
                throw NoQualifyingArc(v);
            out.push_back({pick, v});
            break;
        }
        }
    }
    normalize(out);
    return out;
}

std::size_t lower_bound(const SpanningTree& t, const DominatorTree& d) {
    std::size_t count = 0;
    for (Vertex v = 2; v < t.parent.size(); ++v)
        if (t.parent[v] != d.idom[v])
            ++count;
    return count;
}

std::optional<DominatorMismatch> first_mismatch(const FlowGraph& g, const SpanningTree& t,
                                                const ArcSet& candidate) {
    ArcSet arcs = t.arcs();
    for (Arc a : candidate) {
        if (!g.has_arc(a.tail, a.head))
            throw InputError("candidate arc (" + std::to_string(g.external(a.tail)) + "," +
                             std::to_string(g.external(a.head)) + ") is not an arc of the graph");
        arcs.push_back(a);
    }
    auto sub = FlowGraph::from_internal(g, arcs);
    auto dg = dominator_tree(g);
    auto ds = dominator_tree(sub);
    for (Vertex v = 2; v <= g.n(); ++v)
        if (dg.idom[v] != ds.idom[v])
            return DominatorMismatch{v, dg.idom[v], ds.idom[v]};
    return std::nullopt;
}

bool is_valid_set(const FlowGraph& g, const SpanningTree& t, const ArcSet& candidate) {
    return !first_mismatch(g, t, candidate).has_value();
}

namespace {

// Dominator sets as bit masks by fixpoint iteration, for n <= 64.
class MaskDominators {
public:
    MaskDominators(std::size_t n, const SpanningTree& t) : n_(n) {
        // Tree preorder makes the fixpoint settle in few rounds.
        std::vector<std::vector<Vertex>> kids(n + 1);
        for (Vertex v = 2; v <= n; ++v)
            kids[t.parent[v]].push_back(v);
        std::vector<Vertex> stack{1};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            order_.push_back(u);
            for (auto it = kids[u].rbegin(); it != kids[u].rend(); ++it)
                stack.push_back(*it);
        }
    }

    // preds[v]: bit u-1 set iff (u, v) present.
    std::vector<std::uint64_t> solve(const std::vector<std::uint64_t>& preds) const {
        const std::uint64_t all = n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
        std::vector<std::uint64_t> dom(n_ + 1, all);
        dom[1] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v : order_) {
                if (v == 1)
                    continue;
                std::uint64_t acc = all;
                for (std::uint64_t m = preds[v]; m; m &= m - 1)
                    acc &= dom[std::countr_zero(m) + 1];
                acc |= std::uint64_t(1) << (v - 1);
                if (acc != dom[v]) {
                    dom[v] = acc;
                    changed = true;
                }
            }
        }
        return dom;
    }

private:
    std::size_t n_;
    std::vector<Vertex> order_;
};

} // namespace

ArcSet brute_force_min_valid_set(const FlowGraph& g, const SpanningTree& t) {
    const std::size_t n = g.n();
    ArcSet tree = t.arcs();
    ArcSet extra;
    std::set_difference(g.arcs().begin(), g.arcs().end(), tree.begin(), tree.end(),
                        std::back_inserter(extra));
    if (n > 64)
        throw SizeGuardError("brute-force valid-set search is limited to 64 vertices");
    if (extra.size() > 40)
        throw SizeGuardError("brute-force valid-set search is limited to 40 non-tree arcs");

    MaskDominators solver(n, t);
    std::vector<std::uint64_t> base(n + 1, 0), full(n + 1, 0);
    for (Arc a : tree)
        base[a.head] |= std::uint64_t(1) << (a.tail - 1);
    for (Arc a : g.arcs())
        full[a.head] |= std::uint64_t(1) << (a.tail - 1);
    const auto target = solver.solve(full);

    const std::size_t k_max = extra.size();
    std::vector<std::size_t> pick;
    std::vector<std::uint64_t> preds;
    for (std::size_t k = 0; k <= k_max; ++k) {
        pick.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            pick[i] = i;
        while (true) {
            preds = base;
            for (std::size_t i : pick)
                preds[extra[i].head] |= std::uint64_t(1) << (extra[i].tail - 1);
            if (solver.solve(preds) == target) {
                ArcSet out;
                for (std::size_t i : pick)
                    out.push_back(extra[i]);
                return out;
            }
            // Next k-combination in lexicographic order.
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == extra.size() - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    throw InternalError("the full arc set is always valid");
}

} // namespace flowcert
