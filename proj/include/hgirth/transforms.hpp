#pragma once

#include <cstddef>
#include <vector>

#include "hgirth/hypergraph.hpp"

namespace hgirth::transforms {

/// Hypergraph on the left class whose edges are the nonempty right
/// neighborhoods. Throws PreconditionError if two right vertices share a
/// nonempty neighborhood.
Hypergraph neighborhood_hypergraph(const BipartiteGraph& g);

struct SubstitutionPlan {
    Hypergraph host;
    Hypergraph pattern;  // the template placed inside each host edge
    std::size_t copies_per_edge = 1;
};

/// Replaces every host edge u with copies_per_edge vertex-disjoint copies of
/// the template. Copy j sends template vertex t to the (j*|V_T| + t)-th
/// smallest vertex of u. The vertex set is the host's.
Hypergraph substitute_edges(const SubstitutionPlan& plan);

struct SplitResult {
    Hypergraph graph;
    /// Set when every edge was smaller than r and the output has no edges.
    bool empty_output = false;
};

/// Each edge u becomes floor(|u|/r) disjoint r-subsets of consecutive
/// sorted vertices; edges with |u| < r vanish.
SplitResult split_edges(const Hypergraph& h, std::size_t r);

/// H_1 = neighborhood_hypergraph(bases[0]); each later stage substitutes the
/// previous result into neighborhood_hypergraph(bases[i]) with
/// copy_counts[i-1] copies per edge.
Hypergraph build_recursive(const std::vector<BipartiteGraph>& bases,
                           const std::vector<std::size_t>& copy_counts);

/// Single edge on r vertices.
Hypergraph single_edge(std::size_t r);

/// Linear path of `length` edges of size r, consecutive edges sharing one
/// vertex: (r-1)*length + 1 vertices. path(3, 3) = {0,1,2},{2,3,4},{4,5,6}.
Hypergraph linear_path(std::size_t r, std::size_t length);

}  // namespace hgirth::transforms
