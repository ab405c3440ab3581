#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgirth/hypergraph.hpp"

namespace hgirth {

/// Girth value: a finite cycle length, INFINITE (acyclic), or "no cycle of
/// length <= limit" as returned by a bounded search.
class Girth {
public:
    static Girth finite(std::size_t length) { return Girth(Kind::finite, length); }
    static Girth infinite() { return Girth(Kind::infinite, 0); }
    static Girth none_up_to(std::size_t limit) { return Girth(Kind::none_up_to, limit); }

    bool is_finite() const noexcept { return kind_ == Kind::finite; }
    bool is_infinite() const noexcept { return kind_ == Kind::infinite; }
    bool is_bounded_search() const noexcept { return kind_ == Kind::none_up_to; }

    /// Cycle length; only meaningful when is_finite().
    std::size_t value() const;
    /// Search limit; only meaningful when is_bounded_search().
    std::size_t limit() const;

    /// True when no cycle shorter than g can exist given what is known.
    bool at_least(std::size_t g) const noexcept;

    /// "6", "inf", or "inf-up-to 10".
    std::string to_string() const;

    friend bool operator==(const Girth&, const Girth&) = default;

private:
    enum class Kind { finite, infinite, none_up_to };
    Girth(Kind k, std::size_t n) : kind_(k), n_(n) {}
    Kind kind_;
    std::size_t n_;
};

enum class Side { left, right };

struct BipartiteVertex {
    Side side;
    VertexId id;
    friend bool operator==(const BipartiteVertex&, const BipartiteVertex&) = default;
};

struct BipartiteGirthReport {
    Girth girth = Girth::infinite();
    /// Vertex sequence of a shortest cycle; consecutive entries (cyclically) adjacent.
    std::vector<BipartiteVertex> witness;
};

/// Cycle in the Berge sense: k distinct vertices and k distinct edges with
/// {vertices[i], vertices[i+1 mod k]} contained in edges[i].
struct HyperCycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

struct HypergraphGirthReport {
    Girth girth = Girth::infinite();
    std::optional<HyperCycle> witness;
};

BipartiteGirthReport girth_bipartite(const BipartiteGraph& g);

/// Half the girth of the incidence graph.
HypergraphGirthReport girth_hypergraph(const Hypergraph& h);

struct OracleOptions {
    std::size_t max_incidences = 2000;
};

inline constexpr std::size_t default_oracle_max_len = 16;

/// Exhaustive enumeration of cycles of length 2..max_len directly from the
/// cycle definition. Returns the shortest, or Girth::none_up_to(max_len).
/// Throws ResourceError when h has more incidences than the budget allows.
HypergraphGirthReport girth_oracle(const Hypergraph& h, std::size_t max_len = default_oracle_max_len,
                                   const OracleOptions& options = {});

bool is_valid_cycle(const Hypergraph& h, const HyperCycle& c);
bool is_valid_cycle(const BipartiteGraph& g, std::span<const BipartiteVertex> cycle);

}  // namespace hgirth
