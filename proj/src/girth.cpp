#include "hgirth/girth.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "hgirth/error.hpp"

namespace hgirth {

std::size_t Girth::value() const {
    if (kind_ != Kind::finite) throw PreconditionError("girth is not finite");
    return n_;
}

std::size_t Girth::limit() const {
    if (kind_ != Kind::none_up_to) throw PreconditionError("girth is not a bounded search result");
    return n_;
}

bool Girth::at_least(std::size_t g) const noexcept {
    switch (kind_) {
        case Kind::finite: return n_ >= g;
        case Kind::infinite: return true;
        case Kind::none_up_to: return g <= n_ + 1;
    }
    return false;
}

std::string Girth::to_string() const {
    switch (kind_) {
        case Kind::finite: return std::to_string(n_);
        case Kind::infinite: return "inf";
        case Kind::none_up_to: return "inf-up-to " + std::to_string(n_);
    }
    return {};
}

namespace {

constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();

// Left vertices are 0..n_left-1, right vertices follow.
struct Flat {
    const BipartiteGraph& g;
    std::size_t n_left;

    std::size_t size() const { return g.num_vertices(); }

    template <typename F>
    void for_neighbors(std::size_t x, F&& f) const {
        if (x < n_left) {
            for (VertexId v : g.left_neighbors(static_cast<VertexId>(x))) f(n_left + v);
        } else {
            for (VertexId u : g.right_neighbors(static_cast<VertexId>(x - n_left))) f(u);
        }
    }

    BipartiteVertex label(std::size_t x) const {
        return x < n_left ? BipartiteVertex{Side::left, static_cast<VertexId>(x)}
                          : BipartiteVertex{Side::right, static_cast<VertexId>(x - n_left)};
    }
};

}  // namespace

BipartiteGirthReport girth_bipartite(const BipartiteGraph& g) {
    const Flat flat{g, g.n_left()};
    const std::size_t n = flat.size();
    std::vector<std::size_t> dist(n, unseen), parent(n, unseen);
    std::vector<std::size_t> touched;
    std::vector<std::size_t> queue;

    std::size_t best = unseen;
    std::size_t best_root = unseen, best_a = unseen, best_b = unseen;

    for (std::size_t root = 0; root < n; ++root) {
        for (std::size_t x : touched) dist[x] = parent[x] = unseen;
        touched.clear();
        queue.clear();
        dist[root] = 0;
        touched.push_back(root);
        queue.push_back(root);
        std::size_t local = unseen, la = unseen, lb = unseen;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t x = queue[head];
            // Any cycle closed from here has length >= 2*dist+1.
            if (2 * dist[x] + 1 >= std::min(best, local)) break;
            flat.for_neighbors(x, [&](std::size_t y) {
                if (dist[y] == unseen) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push_back(y);
                    queue.push_back(y);
                } else if (y != parent[x]) {
                    const std::size_t len = dist[x] + dist[y] + 1;
                    if (len < local) {
                        local = len;
                        la = x;
                        lb = y;
                    }
                }
            });
        }
        if (local < best) {
            best = local;
            best_root = root;
            best_a = la;
            best_b = lb;
        }
    }

    BipartiteGirthReport report;
    if (best == unseen) return report;
    report.girth = Girth::finite(best);

    // Rebuild the BFS tree of the winning root to extract the two tree paths.
    std::fill(dist.begin(), dist.end(), unseen);
    std::fill(parent.begin(), parent.end(), unseen);
    queue.assign(1, best_root);
    dist[best_root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t x = queue[head];
        flat.for_neighbors(x, [&](std::size_t y) {
            if (dist[y] == unseen) {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        });
    }
    auto path_to_root = [&](std::size_t x) {
        std::vector<std::size_t> p;
        for (; x != best_root; x = parent[x]) p.push_back(x);
        return p;
    };
    // BFS trees from the same root are not unique, but any tree gives the same
    // distances, and with girth minimal the two root paths meet only at the root.
    auto pa = path_to_root(best_a);
    auto pb = path_to_root(best_b);
    report.witness.push_back(flat.label(best_root));
    for (auto it = pa.rbegin(); it != pa.rend(); ++it) report.witness.push_back(flat.label(*it));
    for (std::size_t x : pb) report.witness.push_back(flat.label(x));
    if (report.witness.size() != best || !is_valid_cycle(g, report.witness))
        throw VerificationError("girth_bipartite: witness reconstruction failed");
    return report;
}

HypergraphGirthReport girth_hypergraph(const Hypergraph& h) {
    const BipartiteGirthReport bip = girth_bipartite(incidence_graph(h));
    HypergraphGirthReport report;
    if (!bip.girth.is_finite()) return report;
    const std::size_t k = bip.girth.value() / 2;
    report.girth = Girth::finite(k);

    auto w = bip.witness;
    if (w.front().side != Side::left) std::rotate(w.begin(), w.begin() + 1, w.end());
    HyperCycle c;
    for (std::size_t i = 0; i < w.size(); i += 2) {
        c.vertices.push_back(w[i].id);
        c.edges.push_back(w[i + 1].id);
    }
    if (!is_valid_cycle(h, c)) throw VerificationError("girth_hypergraph: witness failed to validate");
    report.witness = std::move(c);
    return report;
}

namespace {

class CycleSearch {
public:
    CycleSearch(const Hypergraph& h) : h_(h), incident_(h.num_vertices()) {
        for (EdgeId j = 0; j < h.num_edges(); ++j)
            for (VertexId v : h.edge(j)) incident_[v].push_back(j);
        in_path_.assign(h.num_vertices(), false);
        used_edge_.assign(h.num_edges(), false);
    }

    // Finds a cycle of length <= limit whose smallest vertex is the start.
    std::optional<HyperCycle> find(std::size_t limit) {
        limit_ = limit;
        for (VertexId v0 = 0; v0 < h_.num_vertices(); ++v0) {
            start_ = v0;
            vertices_.assign(1, v0);
            edges_.clear();
            in_path_[v0] = true;
            const bool found = extend();
            in_path_[v0] = false;
            if (found) return HyperCycle{vertices_, edges_};
        }
        return std::nullopt;
    }

private:
    bool extend() {
        const VertexId cur = vertices_.back();
        for (EdgeId e : incident_[cur]) {
            if (used_edge_[e]) continue;
            const Edge& edge = h_.edge(e);
            // Close the cycle through e back to the start vertex.
            if (vertices_.size() >= 2 && std::binary_search(edge.begin(), edge.end(), start_)) {
                edges_.push_back(e);
                return true;
            }
            if (vertices_.size() + 1 > limit_) continue;
            used_edge_[e] = true;
            edges_.push_back(e);
            for (VertexId w : edge) {
                if (w <= start_ || in_path_[w]) continue;
                in_path_[w] = true;
                vertices_.push_back(w);
                if (extend()) return true;
                vertices_.pop_back();
                in_path_[w] = false;
            }
            edges_.pop_back();
            used_edge_[e] = false;
        }
        return false;
    }

    const Hypergraph& h_;
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<bool> in_path_, used_edge_;
    std::vector<VertexId> vertices_;
    std::vector<EdgeId> edges_;
    VertexId start_ = 0;
    std::size_t limit_ = 0;
};

}  // namespace

HypergraphGirthReport girth_oracle(const Hypergraph& h, std::size_t max_len,
                                   const OracleOptions& options) {
    if (max_len < 2) throw PreconditionError("girth_oracle: max_len must be >= 2");
    if (h.num_incidences() > options.max_incidences)
        throw ResourceError("girth_oracle: " + std::to_string(h.num_incidences()) +
                            " incidences exceed the oracle budget of " +
                            std::to_string(options.max_incidences));
    CycleSearch search(h);
    HypergraphGirthReport report;
    // Iterative deepening: the first hit is a shortest cycle.
    for (std::size_t len = 2; len <= max_len; ++len) {
        if (auto c = search.find(len)) {
            report.girth = Girth::finite(c->vertices.size());
            report.witness = std::move(c);
            return report;
        }
    }
    report.girth = Girth::none_up_to(max_len);
    return report;
}

bool is_valid_cycle(const Hypergraph& h, const HyperCycle& c) {
    const std::size_t k = c.vertices.size();
    if (k < 2 || c.edges.size() != k) return false;
    auto vs = c.vertices;
    auto es = c.edges;
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    if (vs.back() >= h.num_vertices() || es.back() >= h.num_edges()) return false;
    for (std::size_t i = 0; i < k; ++i) {
        const Edge& e = h.edge(c.edges[i]);
        if (!std::binary_search(e.begin(), e.end(), c.vertices[i]) ||
            !std::binary_search(e.begin(), e.end(), c.vertices[(i + 1) % k]))
            return false;
    }
    return true;
}

bool is_valid_cycle(const BipartiteGraph& g, std::span<const BipartiteVertex> cycle) {
    const std::size_t k = cycle.size();
    if (k < 4 || k % 2 != 0) return false;
    std::vector<std::pair<int, VertexId>> seen;
    for (const auto& x : cycle) {
        const std::size_t bound = x.side == Side::left ? g.n_left() : g.n_right();
        if (x.id >= bound) return false;
        seen.emplace_back(x.side == Side::left ? 0 : 1, x.id);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& a = cycle[i];
        const auto& b = cycle[(i + 1) % k];
        if (a.side == b.side) return false;
        const VertexId u = a.side == Side::left ? a.id : b.id;
        const VertexId v = a.side == Side::left ? b.id : a.id;
        auto nb = g.left_neighbors(u);
        if (!std::binary_search(nb.begin(), nb.end(), v)) return false;
    }
    return true;
}

}  // namespace hgirth
