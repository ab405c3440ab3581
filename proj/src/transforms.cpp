#include "hgirth/transforms.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hgirth/error.hpp"

namespace hgirth::transforms {

Hypergraph neighborhood_hypergraph(const BipartiteGraph& g) {
    std::map<Edge, VertexId> owner;
    std::vector<Edge> edges;
    for (VertexId v = 0; v < g.n_right(); ++v) {
        const auto nb = g.right_neighbors(v);
        if (nb.empty()) continue;
        Edge e(nb.begin(), nb.end());
        auto [it, fresh] = owner.emplace(e, v);
        if (!fresh)
            throw PreconditionError("right vertices " + std::to_string(it->second) + " and " +
                                    std::to_string(v) + " have the same neighborhood");
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(g.n_left(), std::move(edges));
}

Hypergraph substitute_edges(const SubstitutionPlan& plan) {
    const auto& [host, pattern, k] = plan;
    if (k == 0) throw PreconditionError("substitute_edges: copies_per_edge must be positive");
    const std::size_t span = pattern.num_vertices();
    const std::size_t need = k * span;
    std::vector<Edge> out;
    out.reserve(host.num_edges() * k * pattern.num_edges());
    for (EdgeId id = 0; id < host.num_edges(); ++id) {
        const Edge& u = host.edge(id);
        if (u.size() < need)
            throw PreconditionError("substitute_edges: host edge #" + std::to_string(id) + " has " +
                                    std::to_string(u.size()) + " vertices, " + std::to_string(k) +
                                    " template copies need " + std::to_string(need));
        for (std::size_t j = 0; j < k; ++j) {
            for (const Edge& t : pattern.edges()) {
                Edge e;
                e.reserve(t.size());
                for (VertexId x : t) e.push_back(u[j * span + x]);
                out.push_back(std::move(e));
            }
        }
    }
    try {
        return Hypergraph::from_edges(host.num_vertices(), std::move(out));
    } catch (const PreconditionError& e) {
        throw PreconditionError(std::string("substitute_edges produced an invalid hypergraph: ") +
                                e.what());
    }
}

SplitResult split_edges(const Hypergraph& h, std::size_t r) {
    if (r < 2) throw PreconditionError("split_edges: r must be >= 2");
    std::vector<Edge> out;
    for (const Edge& u : h.edges())
        for (std::size_t j = 0; (j + 1) * r <= u.size(); ++j)
            out.emplace_back(u.begin() + static_cast<std::ptrdiff_t>(j * r),
                             u.begin() + static_cast<std::ptrdiff_t>((j + 1) * r));
    SplitResult result;
    result.empty_output = out.empty() && h.num_edges() > 0;
    result.graph = Hypergraph::from_edges(h.num_vertices(), std::move(out));
    return result;
}

Hypergraph build_recursive(const std::vector<BipartiteGraph>& bases,
                           const std::vector<std::size_t>& copy_counts) {
    if (bases.empty()) throw PreconditionError("build_recursive: no bases");
    if (copy_counts.size() + 1 != bases.size())
        throw PreconditionError("build_recursive: need " + std::to_string(bases.size() - 1) +
                                " copy counts, got " + std::to_string(copy_counts.size()));
    Hypergraph current = neighborhood_hypergraph(bases[0]);
    for (std::size_t i = 1; i < bases.size(); ++i) {
        Hypergraph host = neighborhood_hypergraph(bases[i]);
        const std::size_t need = copy_counts[i - 1] * current.num_vertices();
        if (host.num_edges() > 0 && host.min_edge_size() < need)
            throw PreconditionError("build_recursive: stage " + std::to_string(i) + " requires edge size >= " +
                                    std::to_string(need) + ", host has edges of size " +
                                    std::to_string(host.min_edge_size()));
        current = substitute_edges({std::move(host), std::move(current), copy_counts[i - 1]});
    }
    return current;
}

Hypergraph single_edge(std::size_t r) {
    if (r == 0) throw PreconditionError("single_edge: r must be positive");
    Edge e(r);
    for (std::size_t i = 0; i < r; ++i) e[i] = static_cast<VertexId>(i);
    return Hypergraph::from_edges(r, {e});
}

Hypergraph linear_path(std::size_t r, std::size_t length) {
    if (r < 2 || length == 0) throw PreconditionError("linear_path: need r >= 2 and length >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < length; ++i) {
        Edge e;
        for (std::size_t t = 0; t < r; ++t) e.push_back(static_cast<VertexId>(i * (r - 1) + t));
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges((r - 1) * length + 1, std::move(edges));
}

}  // namespace hgirth::transforms
