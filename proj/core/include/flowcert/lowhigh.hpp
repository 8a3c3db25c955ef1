#ifndef FLOWCERT_LOWHIGH_HPP
#define FLOWCERT_LOWHIGH_HPP

#include <optional>
#include <string>
#include <vector>

#include "flowcert/dominators.hpp"
#include "flowcert/graph.hpp"

namespace flowcert {

/// Total order on the vertices. sequence[k] holds the vertex of rank k+1 and
/// position[v] is the 1-based rank of v.
struct LowHighOrder {
    std::vector<Vertex> sequence;
    std::vector<std::uint32_t> position;

    static LowHighOrder from_sequence(std::vector<Vertex> sequence);

    bool before(Vertex u, Vertex v) const { return position[u] < position[v]; }

    friend bool operator==(const LowHighOrder& a, const LowHighOrder& b) {
        return a.sequence == b.sequence;
    }
};

/// Each arc (u, v), v != start, with u not a proper descendant of v,
/// rewritten as (u', v): u' = u when u = d(v), otherwise the ancestor of u
/// that is a child of d(v). Sorted and de-duplicated.
struct DerivedGraph {
    ArcSet arcs;
};

DerivedGraph derived_graph(const FlowGraph& g, const DominatorTree& d);

/// The same rewrite applied to an arbitrary arc list over the vertices of d.
ArcSet derive_arcs(const ArcSet& arcs, const DominatorTree& d);

enum class LowHighClause { none, not_a_preorder, missing_low_arc, missing_high_arc };

std::string to_string(LowHighClause clause);

struct LowHighReport {
    bool ok = true;
    Vertex vertex = no_vertex;
    LowHighClause clause = LowHighClause::none;

    explicit operator bool() const { return ok; }
};

/// Checks the preorder clause for all vertices first, then the low/high
/// clauses; reports the smallest offending vertex of the first failing stage.
LowHighReport check_low_high(const FlowGraph& g, const DominatorTree& d, const LowHighOrder& order);

/// Throws InternalError if the result would not pass check_low_high.
LowHighOrder construct_low_high(const FlowGraph& g, const DominatorTree& d);

/// Lexicographically first order passing check_low_high; n <= 9.
std::optional<LowHighOrder> brute_force_low_high(const FlowGraph& g, const DominatorTree& d);

/// Replaces d's preorder indices by the ranks of `order`, which must be a
/// preorder of d.
void adopt_order(DominatorTree& d, const LowHighOrder& order);

} // namespace flowcert

#endif
