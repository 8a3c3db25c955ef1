#ifndef FLOWCERT_GRAPH_HPP
#define FLOWCERT_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flowcert/error.hpp"

namespace flowcert {

/// Dense 1-based vertex id. Inside a FlowGraph the start vertex is always 1;
/// ids seen in files are mapped with FlowGraph::internal / FlowGraph::external.
using Vertex = std::uint32_t;

inline constexpr Vertex no_vertex = 0;

struct Arc {
    Vertex tail = no_vertex;
    Vertex head = no_vertex;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Sorted, duplicate-free list of arcs.
using ArcSet = std::vector<Arc>;

/// Sorts and de-duplicates in place.
void normalize(ArcSet& arcs);

class FlowGraph {
public:
    FlowGraph() = default;

    /// Builds a graph from arcs given in external ids. Self-loops and
    /// duplicates are dropped; every vertex must be reachable from `start`.
    static FlowGraph from_external(std::size_t n, Vertex start, std::span<const Arc> arcs);

    /// Builds a graph from arcs already in internal ids (start = 1), keeping
    /// the external labelling of `like`.
    static FlowGraph from_internal(const FlowGraph& like, std::span<const Arc> arcs);

    std::size_t n() const { return n_; }
    std::size_t m() const { return arcs_.size(); }
    static constexpr Vertex start() { return 1; }

    /// All arcs in internal ids, sorted by (tail, head).
    const ArcSet& arcs() const { return arcs_; }

    /// Out-neighbours and in-neighbours, ascending.
    std::span<const Vertex> out(Vertex v) const {
        return {out_adj_.data() + out_off_[v], out_adj_.data() + out_off_[v + 1]};
    }
    std::span<const Vertex> in(Vertex v) const {
        return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
    }

    bool has_arc(Vertex u, Vertex v) const;

    /// The start vertex swaps labels with vertex 1; the map is an involution.
    Vertex external(Vertex v) const { return v == 1 ? start_ext_ : (v == start_ext_ ? 1 : v); }
    Vertex internal(Vertex v) const { return external(v); }
    Vertex external_start() const { return start_ext_; }

    std::size_t self_loops_dropped() const { return self_loops_; }
    std::size_t duplicates_dropped() const { return duplicates_; }

    friend bool operator==(const FlowGraph& a, const FlowGraph& b) {
        return a.n_ == b.n_ && a.start_ext_ == b.start_ext_ && a.arcs_ == b.arcs_;
    }

private:
    void index();

    std::size_t n_ = 0;
    Vertex start_ext_ = 1;
    ArcSet arcs_;
    std::vector<std::uint32_t> out_off_, in_off_;
    std::vector<Vertex> out_adj_, in_adj_;
    std::size_t self_loops_ = 0;
    std::size_t duplicates_ = 0;
};

/// Arborescence rooted at the start vertex; parent[1] == no_vertex.
struct SpanningTree {
    std::vector<Vertex> parent;

    /// Validates that `parent` describes a spanning tree of `g` using arcs of `g`.
    static SpanningTree from_parents(const FlowGraph& g, std::vector<Vertex> parent);

    ArcSet arcs() const;

    friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

enum class Format { edgelist, dot };

enum class TreeStrategy { bfs, dfs, random };

FlowGraph parse_flowgraph(std::string_view text);
SpanningTree parse_tree(std::string_view text, const FlowGraph& g);

/// Arc-set file: a count line followed by that many "tail head" lines,
/// external ids. Arcs must belong to `g`.
ArcSet parse_arcset(std::string_view text, const FlowGraph& g);

std::string serialize(const FlowGraph& g, const SpanningTree* tree = nullptr,
                      Format format = Format::edgelist);
std::string serialize_tree(const FlowGraph& g, const SpanningTree& tree);
std::string serialize_arcset(const FlowGraph& g, const ArcSet& arcs);

/// Vertices reachable from `from` without touching `forbidden`, ascending.
std::vector<Vertex> reachable_set(const FlowGraph& g, Vertex from,
                                  std::optional<Vertex> forbidden = std::nullopt);

/// Same search as reachable_set, as a membership vector of size n+1.
std::vector<char> reachable_mask(const FlowGraph& g, Vertex from, Vertex forbidden = no_vertex);

SpanningTree extract_spanning_tree(const FlowGraph& g, TreeStrategy strategy,
                                   std::uint64_t seed = 0);

/// Random arborescence on n vertices rooted at 1, then extra random arcs up to m.
FlowGraph random_flowgraph(std::size_t n, std::size_t m, std::uint64_t seed);

} // namespace flowcert

#endif
