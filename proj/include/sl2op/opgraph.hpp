#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sl2op/numeric.hpp"

namespace sl2op {

// One class of parallel arcs between two vertices, from < to.
struct Arc {
    int from = 0;
    int to = 0;
    int mult = 1;
    bool operator==(const Arc&) const = default;
};

// A noncrossing loopless multigraph on vertices drawn on a line.
// vertex_base 1: vertices 1..m (the unrooted kind); vertex_base 0:
// vertices 0..m with vertex 0 as the root whose degree labels the
// irreducible type.
class OuterplanarGraph {
  public:
    OuterplanarGraph(int vertex_base, int m, std::vector<Arc> arcs);

    bool rooted() const { return vertex_base_ == 0; }
    int vertex_base() const { return vertex_base_; }
    // number of non-root vertices
    int m() const { return m_; }
    int num_vertices() const { return rooted() ? m_ + 1 : m_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    // degree of the vertex with the given label
    int degree(int v) const;
    // degree tuple indexed by vertex position (root first when rooted)
    std::vector<int> degrees() const;
    int root_degree() const { return rooted() ? degree(0) : 0; }

    bool operator==(const OuterplanarGraph&) const = default;

  private:
    int vertex_base_;
    int m_;
    std::vector<Arc> arcs_; // sorted by (from, to), pairs distinct
};

// An assignment of directions to every edge copy, collapsed to the number
// of copies per arc class that point right-to-left.
struct Orientation {
    OuterplanarGraph graph;
    std::vector<int> flips; // parallel to graph.arcs(), 0 <= flips[c] <= mult

    int inversions() const;
    // per-vertex (out, in) arrow counts, indexed by vertex position
    std::vector<std::pair<int, int>> out_in_degrees() const;
};

// One collapsed orientation together with the number of edge-copy
// orientations sharing it and the sign they all carry.
struct OrientationTerm {
    Orientation orientation;
    int sign = 1;      // (-1)^{sum of flips}
    Int multiplicity;  // product of binomial(mult_c, flips_c)
};

// Lightweight view used by the enumeration callback; valid only during
// the callback.
struct OrientationView {
    const OuterplanarGraph& graph;
    const std::vector<int>& flips;
    int sign;
    const Int& multiplicity;
    const std::vector<std::pair<int, int>>& out_in; // per vertex position
};

// Every noncrossing loopless multigraph with exactly the given degrees,
// each once, sorted by the in-degree vector of its inversion-free
// orientation. When rooted, the first degree is the degree of vertex 0.
std::vector<OuterplanarGraph> enumerate_graphs(const std::vector<int>& degrees, bool rooted);

// Number of such graphs via the contraction recursion, without
// enumeration.
Int count_graphs(const std::vector<int>& degrees, bool rooted);

// The unique orientation without inversions (all arrows left-to-right).
Orientation canonical_orientation(const OuterplanarGraph& g);

// Visit every flip vector; when root_in_degree is given (rooted graphs
// only) restrict to orientations whose in-degree at the root equals it.
void for_each_orientation(const OuterplanarGraph& g, std::optional<int> root_in_degree,
                          const std::function<void(const OrientationView&)>& fn);

// Materialized form of the above.
std::vector<OrientationTerm> orientations(const OuterplanarGraph& g,
                                          std::optional<int> root_in_degree = std::nullopt);

// Per-vertex (out, in) degrees of the inversion-free orientation; this
// indexes the leading basis tensor of the graph.
std::vector<std::pair<int, int>> leading_basis_exponents(const OuterplanarGraph& g);

// Inverse of leading_basis_exponents: rebuild the graph from its bracket
// word, closes before opens at each vertex, matched nearest-first.
// Throws std::invalid_argument if the word is unbalanced.
OuterplanarGraph graph_from_leading(const std::vector<std::pair<int, int>>& out_in, bool rooted);

} // namespace sl2op
