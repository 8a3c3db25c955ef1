#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "flowcert/graph.hpp"
#include "rng.hpp"

namespace flowcert {

FlowGraph random_flowgraph(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n == 0)
        throw InputError("graph must have at least one vertex");
    if (m + 1 < n)
        throw InputError("m must be at least n-1");
    const std::uint64_t capacity = std::uint64_t(n) * (n - 1);
    if (m > capacity)
        throw InputError("m = " + std::to_string(m) + " exceeds n(n-1) = " +
                         std::to_string(capacity));

    detail::Rng rng(seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex(1));
    for (std::size_t i = n - 1; i > 1; --i)
        std::swap(order[i], order[1 + rng.below(i)]);

    ArcSet arcs;
    arcs.reserve(m);
    std::unordered_set<std::uint64_t> present;
    present.reserve(m * 2);
    auto key = [n](Vertex u, Vertex v) { return std::uint64_t(u) * (n + 1) + v; };

    for (std::size_t i = 1; i < n; ++i) {
        Vertex u = order[rng.below(i)];
        arcs.push_back({u, order[i]});
        present.insert(key(u, order[i]));
    }

    const std::size_t extra = m - (n - 1);
    if (extra * 2 <= capacity - (n - 1)) {
        while (arcs.size() < m) {
            Vertex u = Vertex(1 + rng.below(n));
            Vertex v = Vertex(1 + rng.below(n));
            if (u == v || !present.insert(key(u, v)).second)
                continue;
            arcs.push_back({u, v});
        }
    } else {
        // Dense request: draw from the explicit complement.
        std::vector<Arc> rest;
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = 1; v <= n; ++v)
                if (u != v && !present.count(key(u, v)))
                    rest.push_back({u, v});
        for (std::size_t i = 0; i < extra; ++i) {
            std::size_t j = i + rng.below(rest.size() - i);
            std::swap(rest[i], rest[j]);
            arcs.push_back(rest[i]);
        }
    }
    return FlowGraph::from_external(n, 1, arcs);
}

} // namespace flowcert
