#include "hgirth/geometry.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "hgirth/error.hpp"
#include "hgirth/girth.hpp"

namespace hgirth::geometry {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw PreconditionError("inverse of zero");
    // Fermat: a^(p-2).
    std::uint32_t result = 1, base = a % p_;
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

namespace {

using Vec = std::vector<std::uint32_t>;

// Points of PG(dim-1, q) as normalized vectors (first nonzero coordinate 1),
// in lexicographic order of coordinates, with a dense lookup table.
class ProjectiveSpace {
public:
    ProjectiveSpace(const PrimeField& f, std::size_t dim) : f_(f), dim_(dim) {
        const std::uint32_t q = f.order();
        std::size_t total = 1;
        for (std::size_t i = 0; i < dim; ++i) total *= q;
        index_.assign(total, none);
        Vec v(dim, 0);
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (std::size_t i = dim; i-- > 0;) {
                v[i] = static_cast<std::uint32_t>(c % q);
                c /= q;
            }
            auto first = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
            if (first == v.end() || *first != 1) continue;
            index_[code] = points_.size();
            points_.push_back(v);
        }
    }

    std::size_t size() const { return points_.size(); }
    const Vec& point(std::size_t i) const { return points_[i]; }

    // Index of the projective point spanned by nonzero v.
    std::size_t index_of(Vec v) const {
        auto first = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
        if (first == v.end()) throw VerificationError("zero vector has no projective point");
        const std::uint32_t s = f_.inv(*first);
        std::size_t code = 0;
        for (auto& x : v) code = code * f_.order() + f_.mul(x, s);
        return index_[code];
    }

    // All q+1 points on the line through points a and b, sorted.
    std::vector<std::size_t> line_through(std::size_t a, std::size_t b) const {
        std::vector<std::size_t> pts{a};
        const Vec& x = points_[a];
        const Vec& y = points_[b];
        Vec v(dim_);
        for (std::uint32_t t = 0; t < f_.order(); ++t) {
            for (std::size_t i = 0; i < dim_; ++i) v[i] = f_.add(y[i], f_.mul(t, x[i]));
            pts.push_back(index_of(v));
        }
        std::sort(pts.begin(), pts.end());
        return pts;
    }

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);
    const PrimeField& f_;
    std::size_t dim_;
    std::vector<Vec> points_;
    std::vector<std::size_t> index_;
};

void require_range(std::uint32_t q, std::uint32_t lo, std::uint32_t hi, const char* what) {
    if (!is_prime(q)) throw PreconditionError(std::string(what) + ": q=" + std::to_string(q) + " is not prime");
    if (q < lo || q > hi)
        throw PreconditionError(std::string(what) + ": q=" + std::to_string(q) + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// Construction-time self check: exact counts, biregularity and girth.
void self_check(const BipartiteGraph& g, const char* what, std::size_t per_side,
                std::size_t degree, std::size_t girth) {
    auto fail = [&](const std::string& why) {
        throw VerificationError(std::string(what) + " construction failed: " + why);
    };
    if (g.n_left() != per_side || g.n_right() != per_side)
        fail("expected " + std::to_string(per_side) + " vertices per side, got " +
             std::to_string(g.n_left()) + "+" + std::to_string(g.n_right()));
    const auto br = g.biregularity();
    if (!br || br->first != degree || br->second != degree)
        fail("not (" + std::to_string(degree) + "," + std::to_string(degree) + ")-biregular");
    const auto got = girth_bipartite(g).girth;
    if (!got.is_finite() || got.value() != girth)
        fail("girth " + got.to_string() + ", expected " + std::to_string(girth));
}

// Lines from point pairs: a line is kept once, from its two smallest points.
template <typename PairOk, typename LineOk>
BipartiteGraph lines_from_pairs(const ProjectiveSpace& space, const std::vector<std::size_t>& pts,
                                PairOk&& pair_ok, LineOk&& line_ok) {
    std::vector<std::size_t> local(space.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < pts.size(); ++i) local[pts[i]] = i;
    std::vector<BipartiteGraph::Incidence> inc;
    VertexId line_id = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const std::size_t a = pts[i], b = pts[j];
            if (!pair_ok(space.point(a), space.point(b))) continue;
            const auto line = space.line_through(a, b);
            if (line[0] != a || line[1] != b) continue;
            if (!line_ok(space.point(a), space.point(b))) continue;
            for (std::size_t x : line) {
                if (local[x] == static_cast<std::size_t>(-1))
                    throw VerificationError("line leaves the point set");
                inc.emplace_back(static_cast<VertexId>(local[x]), line_id);
            }
            ++line_id;
        }
    }
    return BipartiteGraph::from_incidences(pts.size(), line_id, std::move(inc));
}

}  // namespace

BipartiteGraph projective_plane(std::uint32_t q) {
    require_range(q, 2, 13, "projective_plane");
    const PrimeField f(q);
    const ProjectiveSpace space(f, 3);
    std::vector<BipartiteGraph::Incidence> inc;
    // Lines are labelled by their dual coordinates, which run over the same set.
    for (std::size_t u = 0; u < space.size(); ++u) {
        for (std::size_t l = 0; l < space.size(); ++l) {
            const Vec& x = space.point(u);
            const Vec& a = space.point(l);
            std::uint32_t dot = 0;
            for (int i = 0; i < 3; ++i) dot = f.add(dot, f.mul(x[i], a[i]));
            if (dot == 0) inc.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(l));
        }
    }
    auto g = BipartiteGraph::from_incidences(space.size(), space.size(), std::move(inc));
    self_check(g, "projective_plane", q * q + q + 1, q + 1, 6);
    return g;
}

BipartiteGraph symplectic_quadrangle(std::uint32_t q) {
    require_range(q, 2, 7, "symplectic_quadrangle");
    const PrimeField f(q);
    const ProjectiveSpace space(f, 4);
    auto form = [&](const Vec& x, const Vec& y) {
        std::uint32_t s = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
        return f.add(s, f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2])));
    };
    std::vector<std::size_t> pts(space.size());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = i;
    auto g = lines_from_pairs(
        space, pts, [&](const Vec& x, const Vec& y) { return form(x, y) == 0; },
        [](const Vec&, const Vec&) { return true; });
    self_check(g, "symplectic_quadrangle", (q + 1) * (q * q + 1), q + 1, 8);
    return g;
}

BipartiteGraph split_cayley_hexagon(std::uint32_t q) {
    require_range(q, 2, 5, "split_cayley_hexagon");
    const PrimeField f(q);
    const ProjectiveSpace space(f, 7);
    auto quad = [&](const Vec& x) {
        std::uint32_t s = f.add(f.mul(x[0], x[4]), f.add(f.mul(x[1], x[5]), f.mul(x[2], x[6])));
        return f.sub(s, f.mul(x[3], x[3]));
    };
    // Polarization of quad: quad(x+y) - quad(x) - quad(y).
    auto polar = [&](const Vec& x, const Vec& y) {
        std::uint32_t s = 0;
        for (auto [i, j] : std::array<std::pair<int, int>, 3>{{{0, 4}, {1, 5}, {2, 6}}})
            s = f.add(s, f.add(f.mul(x[i], y[j]), f.mul(x[j], y[i])));
        return f.sub(s, f.mul(2 % q, f.mul(x[3], y[3])));
    };
    auto pl = [&](const Vec& x, const Vec& y, int i, int j) {
        return f.sub(f.mul(x[i], y[j]), f.mul(x[j], y[i]));
    };
    // Hexagon lines among the quadric lines: p12=p34, p54=p32, p20=p35,
    // p65=p30, p01=p36, p46=p31.
    auto hexagon_line = [&](const Vec& x, const Vec& y) {
        return pl(x, y, 1, 2) == pl(x, y, 3, 4) && pl(x, y, 5, 4) == pl(x, y, 3, 2) &&
               pl(x, y, 2, 0) == pl(x, y, 3, 5) && pl(x, y, 6, 5) == pl(x, y, 3, 0) &&
               pl(x, y, 0, 1) == pl(x, y, 3, 6) && pl(x, y, 4, 6) == pl(x, y, 3, 1);
    };
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (quad(space.point(i)) == 0) pts.push_back(i);
    auto g = lines_from_pairs(
        space, pts, [&](const Vec& x, const Vec& y) { return polar(x, y) == 0; }, hexagon_line);
    self_check(g, "split_cayley_hexagon", (q + 1) * (q * q * q * q + q * q + 1), q + 1, 12);
    return g;
}

namespace {

// Uniform draw in [0, bound) by rejection; independent of the standard
// library's distribution implementations so outputs match across platforms.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

}  // namespace

GreedyResult greedy_high_girth_bipartite(const GreedyParams& params) {
    const auto& [n_left, n_right, right_degree, target, seed] = params;
    if (n_left == 0 || n_right == 0 || right_degree == 0)
        throw PreconditionError("greedy: counts must be positive");
    if (target < 4 || target % 2 != 0)
        throw PreconditionError("greedy: target girth must be even and >= 4");

    std::vector<std::uint64_t> grid(n_left * n_right);
    for (std::uint64_t i = 0; i < grid.size(); ++i) grid[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = grid.size(); i > 1; --i) std::swap(grid[i - 1], grid[draw_below(rng, i)]);

    // Flat vertex ids: left 0..n_left-1, right n_left..
    std::vector<std::vector<std::size_t>> adj(n_left + n_right);
    std::vector<std::size_t> stamp(adj.size(), 0), dist(adj.size(), 0);
    std::size_t epoch = 0;
    std::vector<std::size_t> frontier;
    // True iff `to` is within `depth` steps of `from`.
    auto within = [&](std::size_t from, std::size_t to, std::size_t depth) {
        ++epoch;
        frontier.assign(1, from);
        stamp[from] = epoch;
        dist[from] = 0;
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            const std::size_t x = frontier[head];
            if (x == to) return true;
            if (dist[x] == depth) continue;
            for (std::size_t y : adj[x]) {
                if (stamp[y] == epoch) continue;
                stamp[y] = epoch;
                dist[y] = dist[x] + 1;
                frontier.push_back(y);
            }
        }
        return false;
    };

    GreedyReport report;
    std::vector<BipartiteGraph::Incidence> inc;
    std::size_t full = 0;
    for (std::uint64_t cell : grid) {
        if (full == n_right) break;
        const std::size_t u = cell / n_right;
        const std::size_t v = cell % n_right;
        const std::size_t vr = n_left + v;
        ++report.proposals;
        if (adj[vr].size() >= right_degree) continue;
        // New cycles through u-v have length dist(u,v)+1.
        if (within(u, vr, target - 2)) continue;
        adj[u].push_back(vr);
        adj[vr].push_back(u);
        inc.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        ++report.accepted;
        if (adj[vr].size() == right_degree) ++full;
    }

    report.right_degree_histogram.assign(right_degree + 1, 0);
    for (std::size_t v = 0; v < n_right; ++v) {
        const std::size_t d = adj[n_left + v].size();
        ++report.right_degree_histogram[d];
        report.shortfall += right_degree - d;
    }
    return {BipartiteGraph::from_incidences(n_left, n_right, std::move(inc)), std::move(report)};
}

Generated generate(const GeometrySpec& spec) {
    switch (spec.kind) {
        case GeometryKind::plane: return {projective_plane(spec.q), std::nullopt};
        case GeometryKind::quadrangle: return {symplectic_quadrangle(spec.q), std::nullopt};
        case GeometryKind::hexagon: return {split_cayley_hexagon(spec.q), std::nullopt};
        case GeometryKind::greedy: {
            auto r = greedy_high_girth_bipartite(spec.greedy);
            return {std::move(r.graph), std::move(r.report)};
        }
    }
    throw PreconditionError("unknown geometry kind");
}

std::string to_string(GeometryKind kind) {
    switch (kind) {
        case GeometryKind::plane: return "plane";
        case GeometryKind::quadrangle: return "quadrangle";
        case GeometryKind::hexagon: return "hexagon";
        case GeometryKind::greedy: return "greedy";
    }
    return "?";
}

std::optional<GeometryKind> parse_geometry_kind(const std::string& name) {
    if (name == "plane") return GeometryKind::plane;
    if (name == "quadrangle") return GeometryKind::quadrangle;
    if (name == "hexagon") return GeometryKind::hexagon;
    if (name == "greedy") return GeometryKind::greedy;
    return std::nullopt;
}

}  // namespace hgirth::geometry
