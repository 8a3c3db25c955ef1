#ifndef FLOWCERT_DIVERGENT_HPP
#define FLOWCERT_DIVERGENT_HPP

#include <vector>

#include "flowcert/dominators.hpp"
#include "flowcert/graph.hpp"
#include "flowcert/lowhigh.hpp"

namespace flowcert {

/// Parent maps of two spanning trees; b[1] == r[1] == no_vertex.
struct TreePair {
    std::vector<Vertex> b;
    std::vector<Vertex> r;

    friend bool operator==(const TreePair&, const TreePair&) = default;
};

/// Picks b(v) = r(v) = d(v) when (d(v), v) is usable, otherwise the closest
/// usable in-neighbours u < v < w with w outside v's subtree. Vertices are
/// handled in order rank. Throws ChoiceUnavailable for the first vertex
/// without a usable choice.
TreePair build_divergent_trees(const FlowGraph& g, const DominatorTree& d, const LowHighOrder& order);

/// As above, using only arcs of `allowed` (which must be arcs of g).
TreePair build_divergent_trees(const FlowGraph& g, const DominatorTree& d, const LowHighOrder& order,
                               const ArcSet& allowed);

struct DivergenceReport {
    bool ok = true;
    Vertex vertex = no_vertex;

    explicit operator bool() const { return ok; }
};

/// True iff for every v the root paths to v in both trees share exactly the
/// dominators of v. Also fails, at the offending vertex, if either map is not
/// a spanning tree of g.
DivergenceReport check_divergent(const FlowGraph& g, const DominatorTree& d, const TreePair& pair);

} // namespace flowcert

#endif
