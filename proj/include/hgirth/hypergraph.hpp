#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hgirth {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Edge = std::vector<VertexId>;

/// Finite hypergraph on vertices 0..num_vertices-1 in canonical form: every
/// edge is a nonempty strictly increasing vertex list, edges are pairwise
/// distinct and sorted lexicographically.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Canonicalizes and validates. Each edge is sorted; repeated vertices
    /// inside an edge, empty edges, out-of-range ids and duplicate edges are
    /// rejected with a PreconditionError naming the offending edge.
    static Hypergraph from_edges(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_.at(id); }

    /// Sum of edge sizes.
    std::size_t num_incidences() const noexcept;
    std::size_t min_edge_size() const noexcept;
    std::size_t max_edge_size() const noexcept;
    std::vector<std::size_t> degrees() const;

    /// Same edges on a larger vertex set; new vertices are isolated.
    Hypergraph with_num_vertices(std::size_t n) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t num_vertices_ = 0;
    std::vector<Edge> edges_;
};

/// Bipartite graph with classes left = 0..n_left-1 and right = 0..n_right-1.
/// Incidences are unique (left, right) pairs in sorted order.
class BipartiteGraph {
public:
    using Incidence = std::pair<VertexId, VertexId>;

    BipartiteGraph() = default;

    static BipartiteGraph from_incidences(std::size_t n_left, std::size_t n_right,
                                          std::vector<Incidence> incidences);

    std::size_t n_left() const noexcept { return n_left_; }
    std::size_t n_right() const noexcept { return n_right_; }
    std::size_t num_vertices() const noexcept { return n_left_ + n_right_; }
    const std::vector<Incidence>& incidences() const noexcept { return incidences_; }

    std::span<const VertexId> left_neighbors(VertexId u) const;
    std::span<const VertexId> right_neighbors(VertexId v) const;
    std::size_t left_degree(VertexId u) const { return left_neighbors(u).size(); }
    std::size_t right_degree(VertexId v) const { return right_neighbors(v).size(); }

    /// (d, r) when every left vertex has degree d and every right vertex degree r.
    std::optional<std::pair<std::size_t, std::size_t>> biregularity() const;

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.n_left_ == b.n_left_ && a.n_right_ == b.n_right_ &&
               a.incidences_ == b.incidences_;
    }

private:
    std::size_t n_left_ = 0;
    std::size_t n_right_ = 0;
    std::vector<Incidence> incidences_;
    // CSR adjacency for both sides.
    std::vector<std::size_t> left_offsets_, right_offsets_;
    std::vector<VertexId> left_adj_, right_adj_;
};

struct StructureReport {
    std::size_t num_vertices = 0;
    std::size_t num_edges = 0;
    /// r when every edge has exactly r vertices; absent for mixed sizes and
    /// for an empty edge set (then vacuous_uniformity is set).
    std::optional<std::size_t> uniformity;
    bool vacuous_uniformity = false;
    /// d when every vertex has degree d; 0 for edgeless or vertexless input.
    std::optional<std::size_t> regularity;
    std::size_t isolated_vertices = 0;
};

StructureReport validate(const Hypergraph& h);

/// Left class = vertices of h, right class = edges of h in canonical order.
BipartiteGraph incidence_graph(const Hypergraph& h);

}  // namespace hgirth
