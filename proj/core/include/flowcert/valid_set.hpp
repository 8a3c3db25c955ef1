#ifndef FLOWCERT_VALID_SET_HPP
#define FLOWCERT_VALID_SET_HPP

#include <cstddef>
#include <optional>

#include "flowcert/dominators.hpp"
#include "flowcert/graph.hpp"
#include "flowcert/lowhigh.hpp"

namespace flowcert {

enum class ValidSetCase { unchanged, idom_arc, low_arc, high_arc };

/// Which rule applies to v: tree parent already d(v); (d(v), v) exists; or
/// an arc from before (tree parent after v) or after v (tree parent before v).
ValidSetCase classify(const FlowGraph& g, const SpanningTree& t, const DominatorTree& d,
                      const LowHighOrder& order, Vertex v);

/// Minimum set A' of non-tree arcs such that (V, A_T + A') keeps the
/// dominators of g. Throws NoQualifyingArc if the order is not low-high.
ArcSet compute_valid_set(const FlowGraph& g, const SpanningTree& t, const DominatorTree& d,
                         const LowHighOrder& order);

/// Number of vertices whose tree parent is not their immediate dominator.
std::size_t lower_bound(const SpanningTree& t, const DominatorTree& d);

struct DominatorMismatch {
    Vertex vertex;
    Vertex in_graph;
    Vertex in_subgraph;
};

/// First vertex whose immediate dominator in (V, A_T + candidate) differs
/// from the one in g. Throws InputError if a candidate arc is not in g.
std::optional<DominatorMismatch> first_mismatch(const FlowGraph& g, const SpanningTree& t,
                                                const ArcSet& candidate);

bool is_valid_set(const FlowGraph& g, const SpanningTree& t, const ArcSet& candidate);

/// Smallest valid subset of the non-tree arcs, lexicographically first among
/// equal sizes, by exhaustive search. Limited to 64 vertices and 40 arcs.
ArcSet brute_force_min_valid_set(const FlowGraph& g, const SpanningTree& t);

} // namespace flowcert

#endif
