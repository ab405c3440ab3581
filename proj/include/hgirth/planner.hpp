#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "hgirth/error.hpp"

namespace hgirth::planner {

/// Caps the size of any integer the planner is willing to expand.
struct DigitBudget {
    std::size_t max_digits = 1'000'000;
};

/// Exact value base^exponent with a rational exponent whose denominator
/// divides 72.
class PowerExpr {
public:
    PowerExpr(mpz_class base, mpq_class exponent);

    const mpz_class& base() const noexcept { return base_; }
    const mpq_class& exponent() const noexcept { return exponent_; }
    bool has_integer_exponent() const { return exponent_.get_den() == 1; }

    /// Exact integer value; requires a nonnegative integer exponent.
    mpz_class expand(const DigitBudget& budget = {}) const;

    /// Upper estimate of the decimal digit count of the value.
    double approx_digits() const;

    /// "5^19" or "5^231/8" (reduced).
    std::string to_string() const;
    static PowerExpr parse(const std::string& text);

    friend bool operator==(const PowerExpr& a, const PowerExpr& b) {
        return a.base_ == b.base_ && a.exponent_ == b.exponent_;
    }

private:
    mpz_class base_;
    mpq_class exponent_;
};

/// Sizes of the color classes of the generalized hexagon of order (q^3, q).
struct HexagonParams {
    mpz_class q;
    mpz_class v() const;  // (1+q)(1+q^4+q^8)
    mpz_class b() const;  // (1+q^3)(1+q^4+q^8)
};

/// Sizes of the color classes of the Ree-Tits octagon of order (q^2, q).
struct OctagonParams {
    mpz_class q;
    mpz_class v() const;  // (1+q)(1+q^3+q^6+q^9)
    mpz_class b() const;  // (1+q^2)(1+q^3+q^6+q^9)
};

HexagonParams hexagon_params(const mpz_class& q);
/// q must be 2^m with m odd.
OctagonParams octagon_params(const mpz_class& q);

/// Exponent of Q_{p,m,n}: 9^(n-1)(m+1/8) - 1/8.
mpq_class q_exponent(std::uint64_t m, std::uint64_t n);
/// Exponent of Q'_{2,m,n}: 10^(n-1)(m+1/9) - 1/9.
mpq_class q_prime_exponent(std::uint64_t m, std::uint64_t n);

/// Q_{p,m,n} in closed form, cross-checked against Q_1 = p^m, Q_n = p Q_{n-1}^9.
/// Requires p prime, m >= 2, n >= 1, p^(m-1) >= 5.
PowerExpr q_sequence(const mpz_class& p, std::uint64_t m, std::uint64_t n);
/// Q'_{2,m,n} in closed form, cross-checked against Q'_n = 2 Q'_{n-1}^10.
/// Requires m odd, m >= 5, n >= 1.
PowerExpr q_prime_sequence(std::uint64_t m, std::uint64_t n);

/// p^{(11/8)(9^n(m+1/8) - (n+m+1/8))}
PowerExpr edge_bound_hexagon(const mpz_class& p, std::uint64_t m, std::uint64_t n);
/// 2^{(11/9)(10^n(m+1/9) - (n+m+1/9))}
PowerExpr edge_bound_octagon(std::uint64_t m, std::uint64_t n);

/// (n+m+1/8) / (9^n (m+1/8)), reduced.
mpq_class epsilon(std::uint64_t m, std::uint64_t n);

void require_hexagon_assumptions(const mpz_class& p, std::uint64_t m, std::uint64_t n);
void require_octagon_assumptions(std::uint64_t m, std::uint64_t n);

struct Seed {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    mpz_class vertices;  // N*
};

struct Plan {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    Seed seed;
};

/// Raised when N is smaller than the seed vertex count N*.
class BelowSeedError : public PreconditionError {
public:
    BelowSeedError(const mpz_class& seed_vertices, const std::string& what)
        : PreconditionError(what), seed_vertices_(seed_vertices) {}
    const mpz_class& seed_vertices() const noexcept { return seed_vertices_; }

private:
    mpz_class seed_vertices_;
};

/// Smallest m* >= 2 with p^(m*-1) >= 5 and p^m* >= r-1; n* with
/// 9^(n*-1) <= m* < 9^n*.
Seed hexagon_seed(const mpz_class& p, std::uint64_t r);
/// Smallest odd m* >= 5 with r <= 1 + 2^m*; n* with
/// 10^(n*-1) - 1 <= m* <= 10^n* - 1.
Seed octagon_seed(std::uint64_t r);

/// (m, n) with m* <= m, n* <= n, 9^(n-1) <= m <= 9^(n+1) and
/// v(Q_{p,m,n}) <= N < v(Q_{p,m+1,n}).
Plan plan_parameters_hexagon(const mpz_class& p, std::uint64_t r, const mpz_class& N,
                             const DigitBudget& budget = {});
/// Odd m with m* <= m, n* <= n, 10^(n-1)-1 <= m <= 10^(n+1)-1 and
/// v'(Q'_{2,m,n}) <= N < v'(Q'_{2,m+2,n}).
Plan plan_parameters_octagon(std::uint64_t r, const mpz_class& N, const DigitBudget& budget = {});

/// Re-checks every condition of a hexagon plan with fresh bignum comparisons.
bool sandwich_holds_hexagon(const mpz_class& p, std::uint64_t r, const mpz_class& N, const Plan& plan);
bool sandwich_holds_octagon(std::uint64_t r, const mpz_class& N, const Plan& plan);

/// v(Q_{p,m,n}) and v'(Q'_{2,m,n}) as exact integers.
mpz_class hexagon_vertices(const mpz_class& p, std::uint64_t m, std::uint64_t n,
                           const DigitBudget& budget = {});
mpz_class octagon_vertices(std::uint64_t m, std::uint64_t n, const DigitBudget& budget = {});

struct TheoremBound {
    /// (11/8)(1 - 33/sqrt(log_p N)) for girth 6, (11/9)(1 - 13 sqrt(10/log_2 N)) for girth 8.
    double exponent = 0;
    /// Same value printed to 20 significant digits from the 256-bit evaluation.
    std::string exponent_text;
    /// Girth 6 only: c(p) = (11/8) * 33 * sqrt(log_2 p), so the bound reads
    /// N^(11/8 - c/sqrt(log_2 N)).
    std::optional<double> c_derived;
    /// Planned parameters and the construction's edge bound when N >= N*.
    std::optional<Plan> plan;
    std::optional<PowerExpr> edge_bound;
};

/// girth is 6 or 8; p is ignored for girth 8 (base 2).
TheoremBound theorem_bound(int girth, const mpz_class& p, const mpz_class& N, std::uint64_t r = 2,
                           const DigitBudget& budget = {});

/// Exact base-10 digit estimate used for budget gates.
double approx_digits(const mpz_class& base, const mpz_class& exponent);
void require_budget(double digits, const DigitBudget& budget, const std::string& what);

mpz_class parse_decimal(const std::string& text);

}  // namespace hgirth::planner
