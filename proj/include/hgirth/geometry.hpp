#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgirth/hypergraph.hpp"

namespace hgirth::geometry {

bool is_prime(std::uint64_t n);

/// Arithmetic modulo a prime p, elements in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t order() const noexcept { return p_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + p_ - b) % p_; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return (p_ - a) % p_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;

private:
    std::uint32_t p_;
};

/// Incidence graph of PG(2,q): left = points, right = lines. 2 <= q <= 13.
BipartiteGraph projective_plane(std::uint32_t q);

/// Incidence graph of the symplectic quadrangle W(q): left = points of
/// PG(3,q), right = totally isotropic lines. 2 <= q <= 7.
BipartiteGraph symplectic_quadrangle(std::uint32_t q);

/// Incidence graph of the split Cayley hexagon H(q) of order (q,q):
/// left = points of the parabolic quadric X0X4+X1X5+X2X6 = X3^2 in PG(6,q),
/// right = quadric lines selected by the hexagon's Grassmann conditions.
BipartiteGraph split_cayley_hexagon(std::uint32_t q);

struct GreedyParams {
    std::size_t n_left = 0;
    std::size_t n_right = 0;
    std::size_t right_degree = 0;
    std::size_t target_girth = 0;
    std::uint64_t seed = 0;
};

struct GreedyReport {
    /// histogram[d] = number of right vertices of degree d.
    std::vector<std::size_t> right_degree_histogram;
    /// Sum over right vertices of (right_degree - achieved degree).
    std::size_t shortfall = 0;
    std::size_t accepted = 0;
    std::size_t proposals = 0;
};

struct GreedyResult {
    BipartiteGraph graph;
    GreedyReport report;
};

/// Single seeded pass over the shuffled left x right grid. An incidence is
/// accepted iff its right end has spare degree and its endpoints are at
/// distance >= target_girth - 1, so the output girth is >= target_girth.
GreedyResult greedy_high_girth_bipartite(const GreedyParams& params);

enum class GeometryKind { plane, quadrangle, hexagon, greedy };

struct GeometrySpec {
    GeometryKind kind = GeometryKind::plane;
    std::uint32_t q = 2;
    GreedyParams greedy;
};

struct Generated {
    BipartiteGraph graph;
    std::optional<GreedyReport> greedy_report;
};

/// Validates the spec, then dispatches to the generator.
Generated generate(const GeometrySpec& spec);

std::string to_string(GeometryKind kind);
std::optional<GeometryKind> parse_geometry_kind(const std::string& name);

}  // namespace hgirth::geometry
