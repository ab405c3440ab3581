#include "hgirth/hypergraph.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "hgirth/error.hpp"

namespace hgirth {

namespace {

std::string edge_to_string(const Edge& e) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << '}';
    return os.str();
}

void build_csr(std::size_t n, const std::vector<BipartiteGraph::Incidence>& inc, bool left_side,
               std::vector<std::size_t>& offsets, std::vector<VertexId>& adj) {
    offsets.assign(n + 1, 0);
    for (const auto& [u, v] : inc) ++offsets[(left_side ? u : v) + 1];
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    adj.assign(inc.size(), 0);
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    // Incidences are sorted by (left, right), so both sides come out sorted.
    for (const auto& [u, v] : inc) {
        if (left_side)
            adj[cursor[u]++] = v;
        else
            adj[cursor[v]++] = u;
    }
}

}  // namespace

Hypergraph Hypergraph::from_edges(std::size_t num_vertices, std::vector<Edge> edges) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Edge& e = edges[i];
        if (e.empty()) throw PreconditionError("edge #" + std::to_string(i) + " is empty");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw PreconditionError("edge " + edge_to_string(e) + " repeats a vertex");
        if (e.back() >= num_vertices)
            throw PreconditionError("edge " + edge_to_string(e) + " has vertex id out of range (" +
                                    std::to_string(num_vertices) + " vertices)");
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw PreconditionError("duplicate edge " + edge_to_string(*dup));
    Hypergraph h;
    h.num_vertices_ = num_vertices;
    h.edges_ = std::move(edges);
    return h;
}

std::size_t Hypergraph::num_incidences() const noexcept {
    std::size_t total = 0;
    for (const auto& e : edges_) total += e.size();
    return total;
}

std::size_t Hypergraph::min_edge_size() const noexcept {
    std::size_t best = 0;
    for (const auto& e : edges_)
        if (best == 0 || e.size() < best) best = e.size();
    return best;
}

std::size_t Hypergraph::max_edge_size() const noexcept {
    std::size_t best = 0;
    for (const auto& e : edges_) best = std::max(best, e.size());
    return best;
}

std::vector<std::size_t> Hypergraph::degrees() const {
    std::vector<std::size_t> deg(num_vertices_, 0);
    for (const auto& e : edges_)
        for (VertexId v : e) ++deg[v];
    return deg;
}

Hypergraph Hypergraph::with_num_vertices(std::size_t n) const {
    if (n < num_vertices_)
        throw PreconditionError("cannot shrink vertex set from " + std::to_string(num_vertices_) +
                                " to " + std::to_string(n));
    Hypergraph h = *this;
    h.num_vertices_ = n;
    return h;
}

BipartiteGraph BipartiteGraph::from_incidences(std::size_t n_left, std::size_t n_right,
                                               std::vector<Incidence> incidences) {
    std::sort(incidences.begin(), incidences.end());
    if (auto dup = std::adjacent_find(incidences.begin(), incidences.end());
        dup != incidences.end())
        throw PreconditionError("duplicate incidence (" + std::to_string(dup->first) + ", " +
                                std::to_string(dup->second) + ")");
    for (const auto& [u, v] : incidences)
        if (u >= n_left || v >= n_right)
            throw PreconditionError("incidence (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") out of range");
    BipartiteGraph g;
    g.n_left_ = n_left;
    g.n_right_ = n_right;
    g.incidences_ = std::move(incidences);
    build_csr(n_left, g.incidences_, true, g.left_offsets_, g.left_adj_);
    build_csr(n_right, g.incidences_, false, g.right_offsets_, g.right_adj_);
    return g;
}

std::span<const VertexId> BipartiteGraph::left_neighbors(VertexId u) const {
    return {left_adj_.data() + left_offsets_.at(u), left_adj_.data() + left_offsets_.at(u + 1)};
}

std::span<const VertexId> BipartiteGraph::right_neighbors(VertexId v) const {
    return {right_adj_.data() + right_offsets_.at(v), right_adj_.data() + right_offsets_.at(v + 1)};
}

std::optional<std::pair<std::size_t, std::size_t>> BipartiteGraph::biregularity() const {
    if (n_left_ == 0 || n_right_ == 0) return std::nullopt;
    const std::size_t d = left_degree(0);
    const std::size_t r = right_degree(0);
    for (VertexId u = 0; u < n_left_; ++u)
        if (left_degree(u) != d) return std::nullopt;
    for (VertexId v = 0; v < n_right_; ++v)
        if (right_degree(v) != r) return std::nullopt;
    return std::pair{d, r};
}

StructureReport validate(const Hypergraph& h) {
    StructureReport rep;
    rep.num_vertices = h.num_vertices();
    rep.num_edges = h.num_edges();
    if (h.num_edges() == 0) {
        rep.vacuous_uniformity = true;
    } else if (h.min_edge_size() == h.max_edge_size()) {
        rep.uniformity = h.min_edge_size();
    }
    const auto deg = h.degrees();
    rep.isolated_vertices = static_cast<std::size_t>(std::count(deg.begin(), deg.end(), 0u));
    if (deg.empty()) {
        rep.regularity = 0;
    } else if (std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == deg[0]; })) {
        rep.regularity = deg[0];
    }
    return rep;
}

BipartiteGraph incidence_graph(const Hypergraph& h) {
    std::vector<BipartiteGraph::Incidence> inc;
    inc.reserve(h.num_incidences());
    for (EdgeId j = 0; j < h.num_edges(); ++j)
        for (VertexId u : h.edge(j)) inc.emplace_back(u, j);
    return BipartiteGraph::from_incidences(h.num_vertices(), h.num_edges(), std::move(inc));
}

}  // namespace hgirth
