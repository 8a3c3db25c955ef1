#ifndef FLOWCERT_SRC_SEMIDOMINATORS_HPP
#define FLOWCERT_SRC_SEMIDOMINATORS_HPP

#include <vector>

#include "flowcert/graph.hpp"

namespace flowcert::detail {

struct SemidominatorResult {
    std::vector<Vertex> idom;
    // Parents of two divergent spanning trees, filled when requested.
    std::vector<Vertex> blue;
    std::vector<Vertex> red;
};

// One depth-first search plus the semi-dominator pass. With `with_pair`,
// also derives a pair of divergent spanning trees from the same labels.
SemidominatorResult semidominators(const FlowGraph& g, bool with_pair);

} // namespace flowcert::detail

#endif
