#include "hgirth/planner.hpp"

#include <cmath>
#include <limits>

#include <mpfr.h>

namespace hgirth::planner {

namespace {

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpz_class pow_u64(std::uint64_t base, std::uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

unsigned long to_ulong(const mpz_class& x, const std::string& what) {
    if (x < 0 || !x.fits_ulong_p()) throw ResourceError(what + ": exponent does not fit a machine word");
    return x.get_ui();
}

std::string str(const mpz_class& x) { return x.get_str(); }

// Exact integer value of an exponent known to be integral.
mpz_class integral(const mpq_class& e, const char* what) {
    if (e.get_den() != 1) throw VerificationError(std::string(what) + " is not an integer");
    return e.get_num();
}

std::size_t bit_length(const mpz_class& x) { return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2); }

}  // namespace

double approx_digits(const mpz_class& base, const mpz_class& exponent) {
    if (base <= 1 || exponent <= 0) return 1;
    return exponent.get_d() * std::log10(base.get_d()) + 1;
}

void require_budget(double digits, const DigitBudget& budget, const std::string& what) {
    if (digits > static_cast<double>(budget.max_digits))
        throw ResourceError("digit budget exceeded at " + what + ": needs about " +
                            std::to_string(static_cast<long long>(digits)) + " digits, budget " +
                            std::to_string(budget.max_digits));
}

PowerExpr::PowerExpr(mpz_class base, mpq_class exponent)
    : base_(std::move(base)), exponent_(std::move(exponent)) {
    exponent_.canonicalize();
    if (base_ < 1) throw PreconditionError("PowerExpr base must be positive");
    if (72 % exponent_.get_den() != 0)
        throw PreconditionError("PowerExpr exponent denominator must divide 72, got " +
                                exponent_.get_str());
}

mpz_class PowerExpr::expand(const DigitBudget& budget) const {
    if (!has_integer_exponent() || exponent_ < 0)
        throw PreconditionError("cannot expand " + to_string() + " to an integer");
    require_budget(approx_digits(), budget, "expanding " + to_string());
    return pow_ui(base_, to_ulong(exponent_.get_num(), "expand"));
}

double PowerExpr::approx_digits() const {
    const mpz_class ceil_exp = (exponent_.get_num() + exponent_.get_den() - 1) / exponent_.get_den();
    return planner::approx_digits(base_, ceil_exp);
}

std::string PowerExpr::to_string() const {
    return str(base_) + "^" + exponent_.get_str();
}

PowerExpr PowerExpr::parse(const std::string& text) {
    const auto caret = text.find('^');
    if (caret == std::string::npos) throw PreconditionError("not a power expression: " + text);
    const mpz_class base = parse_decimal(text.substr(0, caret));
    std::string e = text.substr(caret + 1);
    const bool negative = !e.empty() && e[0] == '-';
    if (negative) e.erase(0, 1);
    const auto slash = e.find('/');
    mpq_class exp(parse_decimal(e.substr(0, slash)),
                  slash == std::string::npos ? mpz_class(1) : parse_decimal(e.substr(slash + 1)));
    if (exp.get_den() == 0) throw PreconditionError("zero denominator in " + text);
    if (negative) exp = -exp;
    PowerExpr result(base, exp);
    if (result.to_string() != text) throw PreconditionError("non-canonical power expression: " + text);
    return result;
}

mpz_class HexagonParams::v() const {
    return (1 + q) * (1 + q * q * q * q + pow_ui(q, 8));
}

mpz_class HexagonParams::b() const {
    return (1 + q * q * q) * (1 + q * q * q * q + pow_ui(q, 8));
}

mpz_class OctagonParams::v() const {
    return (1 + q) * (1 + q * q * q + pow_ui(q, 6) + pow_ui(q, 9));
}

mpz_class OctagonParams::b() const {
    return (1 + q * q) * (1 + q * q * q + pow_ui(q, 6) + pow_ui(q, 9));
}

HexagonParams hexagon_params(const mpz_class& q) {
    if (q < 2) throw PreconditionError("hexagon_params: q must be >= 2");
    return {q};
}

OctagonParams octagon_params(const mpz_class& q) {
    if (q < 2 || mpz_popcount(q.get_mpz_t()) != 1)
        throw PreconditionError("octagon_params: q=" + str(q) + " is not a power of 2");
    const auto m = mpz_scan1(q.get_mpz_t(), 0);
    if (m % 2 == 0)
        throw PreconditionError("octagon_params: q=2^" + std::to_string(m) + " is an even power of 2");
    return {q};
}

mpq_class q_exponent(std::uint64_t m, std::uint64_t n) {
    if (n < 1) throw PreconditionError("n must be >= 1");
    mpq_class e = mpq_class(pow_u64(9, n - 1)) * (mpq_class(m) + mpq_class(1, 8)) - mpq_class(1, 8);
    e.canonicalize();
    return e;
}

mpq_class q_prime_exponent(std::uint64_t m, std::uint64_t n) {
    if (n < 1) throw PreconditionError("n must be >= 1");
    mpq_class e = mpq_class(pow_u64(10, n - 1)) * (mpq_class(m) + mpq_class(1, 9)) - mpq_class(1, 9);
    e.canonicalize();
    return e;
}

void require_hexagon_assumptions(const mpz_class& p, std::uint64_t m, std::uint64_t n) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 50) == 0)
        throw PreconditionError("p=" + str(p) + " is not prime");
    if (m < 2) throw PreconditionError("m=" + std::to_string(m) + " violates m >= 2");
    if (n < 1) throw PreconditionError("n must be >= 1");
    if (pow_ui(p, m - 1) < 5)
        throw PreconditionError("p^(m-1) = " + str(pow_ui(p, m - 1)) + " violates p^(m-1) >= 5");
}

void require_octagon_assumptions(std::uint64_t m, std::uint64_t n) {
    if (m % 2 == 0) throw PreconditionError("m=" + std::to_string(m) + " must be odd");
    if (m < 5) throw PreconditionError("m=" + std::to_string(m) + " violates m >= 5");
    if (n < 1) throw PreconditionError("n must be >= 1");
}

PowerExpr q_sequence(const mpz_class& p, std::uint64_t m, std::uint64_t n) {
    require_hexagon_assumptions(p, m, n);
    const mpq_class closed = q_exponent(m, n);
    mpz_class rec = m;
    for (std::uint64_t i = 2; i <= n; ++i) rec = 9 * rec + 1;  // Q_i = p * Q_{i-1}^9
    if (closed != mpq_class(rec))
        throw VerificationError("Q closed form " + closed.get_str() + " != recursion " + str(rec));
    return {p, closed};
}

PowerExpr q_prime_sequence(std::uint64_t m, std::uint64_t n) {
    require_octagon_assumptions(m, n);
    const mpq_class closed = q_prime_exponent(m, n);
    mpz_class rec = m;
    for (std::uint64_t i = 2; i <= n; ++i) rec = 10 * rec + 1;  // Q'_i = 2 * Q'_{i-1}^10
    if (closed != mpq_class(rec))
        throw VerificationError("Q' closed form " + closed.get_str() + " != recursion " + str(rec));
    if (rec % 2 == 0) throw VerificationError("Q' exponent " + str(rec) + " is even");
    return {2, closed};
}

PowerExpr edge_bound_hexagon(const mpz_class& p, std::uint64_t m, std::uint64_t n) {
    require_hexagon_assumptions(p, m, n);
    const mpq_class eighth(1, 8);
    mpq_class e = mpq_class(11, 8) * (mpq_class(pow_u64(9, n)) * (mpq_class(m) + eighth) -
                                      (mpq_class(n) + mpq_class(m) + eighth));
    return {p, e};
}

PowerExpr edge_bound_octagon(std::uint64_t m, std::uint64_t n) {
    require_octagon_assumptions(m, n);
    const mpq_class ninth(1, 9);
    mpq_class e = mpq_class(11, 9) * (mpq_class(pow_u64(10, n)) * (mpq_class(m) + ninth) -
                                      (mpq_class(n) + mpq_class(m) + ninth));
    return {2, e};
}

mpq_class epsilon(std::uint64_t m, std::uint64_t n) {
    if (m < 1 || n < 1) throw PreconditionError("epsilon: m, n must be >= 1");
    mpq_class e(mpz_class(8 * n + 8 * m + 1), pow_u64(9, n) * mpz_class(8 * m + 1));
    e.canonicalize();
    return e;
}

mpz_class hexagon_vertices(const mpz_class& p, std::uint64_t m, std::uint64_t n,
                           const DigitBudget& budget) {
    const mpz_class e = integral(q_exponent(m, n), "Q exponent");
    require_budget(approx_digits(p, 9 * e), budget, "v(Q_{p," + std::to_string(m) + "," +
                                                         std::to_string(n) + "})");
    return HexagonParams{pow_ui(p, to_ulong(e, "v(Q)"))}.v();
}

mpz_class octagon_vertices(std::uint64_t m, std::uint64_t n, const DigitBudget& budget) {
    const mpz_class e = integral(q_prime_exponent(m, n), "Q' exponent");
    require_budget(approx_digits(2, 10 * e), budget, "v'(Q'_{2," + std::to_string(m) + "," +
                                                         std::to_string(n) + "})");
    return OctagonParams{pow_ui(mpz_class(2), to_ulong(e, "v'(Q')"))}.v();
}

namespace {

// v(p^e) <= N, deciding obviously-too-large cases without expansion:
// v(Q) > Q^deg = p^(deg*e) >= 2^(deg*e*(bits(p)-1)).
template <typename VertexFn>
bool vertices_at_most(const mpz_class& p, const mpz_class& e, unsigned deg, const mpz_class& N,
                      VertexFn&& v) {
    const mpz_class floor_log2_p = bit_length(p) - 1;
    if (deg * e * floor_log2_p >= bit_length(N)) return false;
    return v() <= N;
}

template <typename T>
T ipow(T base, std::uint64_t e) {
    T r = 1;
    while (e--) {
        if (r > std::numeric_limits<T>::max() / base) throw ResourceError("parameter overflow");
        r *= base;
    }
    return r;
}

}  // namespace

Seed hexagon_seed(const mpz_class& p, std::uint64_t r) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 50) == 0) throw PreconditionError("p=" + str(p) + " is not prime");
    if (r < 2) throw PreconditionError("r must be >= 2");
    Seed s;
    s.m = 2;
    while (pow_ui(p, s.m - 1) < 5 || pow_ui(p, s.m) + 1 < r) ++s.m;
    s.n = 1;
    while (ipow<std::uint64_t>(9, s.n) <= s.m) ++s.n;
    s.vertices = hexagon_vertices(p, s.m, s.n);
    return s;
}

Seed octagon_seed(std::uint64_t r) {
    if (r < 2) throw PreconditionError("r must be >= 2");
    Seed s;
    s.m = 5;
    while (pow_ui(mpz_class(2), s.m) + 1 < r) s.m += 2;
    s.n = 1;
    while (ipow<std::uint64_t>(10, s.n) - 1 < s.m) ++s.n;
    s.vertices = octagon_vertices(s.m, s.n);
    return s;
}

Plan plan_parameters_hexagon(const mpz_class& p, std::uint64_t r, const mpz_class& N,
                             const DigitBudget& budget) {
    require_budget(static_cast<double>(mpz_sizeinbase(N.get_mpz_t(), 10)), budget, "input N");
    const Seed seed = hexagon_seed(p, r);
    if (N < seed.vertices)
        throw BelowSeedError(seed.vertices, "N=" + str(N) + " is below the seed N*=" + str(seed.vertices));
    auto fits = [&](std::uint64_t m, std::uint64_t n) {
        const mpz_class e = integral(q_exponent(m, n), "Q exponent");
        return vertices_at_most(p, e, 9, N, [&] { return hexagon_vertices(p, m, n, budget); });
    };
    for (std::uint64_t n = seed.n;; ++n) {
        const std::uint64_t lo = std::max(seed.m, ipow<std::uint64_t>(9, n - 1));
        const std::uint64_t hi = ipow<std::uint64_t>(9, n + 1);
        if (!fits(lo, n))
            throw VerificationError("plan search lost the sandwich at n=" + std::to_string(n));
        if (fits(hi + 1, n)) continue;
        // Largest m in [lo, hi] with v(Q_{p,m,n}) <= N.
        std::uint64_t a = lo, b = hi;
        while (a < b) {
            const std::uint64_t mid = a + (b - a + 1) / 2;
            if (fits(mid, n))
                a = mid;
            else
                b = mid - 1;
        }
        Plan plan{a, n, seed};
        if (!sandwich_holds_hexagon(p, r, N, plan))
            throw VerificationError("plan (m,n)=(" + std::to_string(a) + "," + std::to_string(n) +
                                    ") fails the post-hoc sandwich check");
        return plan;
    }
}

Plan plan_parameters_octagon(std::uint64_t r, const mpz_class& N, const DigitBudget& budget) {
    require_budget(static_cast<double>(mpz_sizeinbase(N.get_mpz_t(), 10)), budget, "input N");
    const Seed seed = octagon_seed(r);
    if (N < seed.vertices)
        throw BelowSeedError(seed.vertices, "N=" + str(N) + " is below the seed N*=" + str(seed.vertices));
    auto fits = [&](std::uint64_t m, std::uint64_t n) {
        const mpz_class e = integral(q_prime_exponent(m, n), "Q' exponent");
        return vertices_at_most(2, e, 10, N, [&] { return octagon_vertices(m, n, budget); });
    };
    for (std::uint64_t n = seed.n;; ++n) {
        std::uint64_t lo = std::max(seed.m, ipow<std::uint64_t>(10, n - 1) - 1);
        if (lo % 2 == 0) ++lo;
        const std::uint64_t hi = ipow<std::uint64_t>(10, n + 1) - 1;
        if (!fits(lo, n))
            throw VerificationError("plan search lost the sandwich at n=" + std::to_string(n));
        if (fits(hi + 2, n)) continue;
        // Largest odd m = lo + 2k in [lo, hi] with v'(Q'_{2,m,n}) <= N.
        std::uint64_t a = 0, b = (hi - lo) / 2;
        while (a < b) {
            const std::uint64_t mid = a + (b - a + 1) / 2;
            if (fits(lo + 2 * mid, n))
                a = mid;
            else
                b = mid - 1;
        }
        Plan plan{lo + 2 * a, n, seed};
        if (!sandwich_holds_octagon(r, N, plan))
            throw VerificationError("plan (m,n)=(" + std::to_string(plan.m) + "," + std::to_string(n) +
                                    ") fails the post-hoc sandwich check");
        return plan;
    }
}

bool sandwich_holds_hexagon(const mpz_class& p, std::uint64_t r, const mpz_class& N, const Plan& plan) {
    const auto [m, n, seed] = plan;
    if (m < seed.m || n < seed.n) return false;
    if (mpz_class(m) < pow_u64(9, n - 1) || mpz_class(m) > pow_u64(9, n + 1)) return false;
    if (pow_ui(p, m) + 1 < r) return false;
    return hexagon_vertices(p, m, n) <= N && N < hexagon_vertices(p, m + 1, n);
}

bool sandwich_holds_octagon(std::uint64_t r, const mpz_class& N, const Plan& plan) {
    const auto [m, n, seed] = plan;
    if (m % 2 == 0 || m < seed.m || n < seed.n) return false;
    if (mpz_class(m) + 1 < pow_u64(10, n - 1) || mpz_class(m) + 1 > pow_u64(10, n + 1)) return false;
    if (pow_ui(mpz_class(2), m) + 1 < r) return false;
    return octagon_vertices(m, n) <= N && N < octagon_vertices(m + 2, n);
}

namespace {

class Real {
public:
    Real() { mpfr_init2(x_, 256); }
    ~Real() { mpfr_clear(x_); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    mpfr_ptr get() { return x_; }

private:
    mpfr_t x_;
};

std::string format20(mpfr_ptr x) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.20Rg", x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

}  // namespace

TheoremBound theorem_bound(int girth, const mpz_class& p, const mpz_class& N, std::uint64_t r,
                           const DigitBudget& budget) {
    if (girth != 6 && girth != 8) throw PreconditionError("girth must be 6 or 8");
    if (N < 2) throw PreconditionError("N must be >= 2");
    if (girth == 6 && mpz_probab_prime_p(p.get_mpz_t(), 50) == 0)
        throw PreconditionError("p=" + str(p) + " is not prime");

    Real log2n, t, e;
    mpfr_set_z(log2n.get(), N.get_mpz_t(), MPFR_RNDN);
    mpfr_log2(log2n.get(), log2n.get(), MPFR_RNDN);
    TheoremBound out;
    if (girth == 6) {
        Real log2p;
        mpfr_set_z(log2p.get(), p.get_mpz_t(), MPFR_RNDN);
        mpfr_log2(log2p.get(), log2p.get(), MPFR_RNDN);
        // t = log_p N
        mpfr_div(t.get(), log2n.get(), log2p.get(), MPFR_RNDN);
        mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);
        mpfr_ui_div(t.get(), 33, t.get(), MPFR_RNDN);
        mpfr_ui_sub(t.get(), 1, t.get(), MPFR_RNDN);
        mpfr_mul_ui(e.get(), t.get(), 11, MPFR_RNDN);
        mpfr_div_ui(e.get(), e.get(), 8, MPFR_RNDN);

        Real c;
        mpfr_sqrt(c.get(), log2p.get(), MPFR_RNDN);
        mpfr_mul_ui(c.get(), c.get(), 11 * 33, MPFR_RNDN);
        mpfr_div_ui(c.get(), c.get(), 8, MPFR_RNDN);
        out.c_derived = mpfr_get_d(c.get(), MPFR_RNDN);
    } else {
        mpfr_ui_div(t.get(), 10, log2n.get(), MPFR_RNDN);
        mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);
        mpfr_mul_ui(t.get(), t.get(), 13, MPFR_RNDN);
        mpfr_ui_sub(t.get(), 1, t.get(), MPFR_RNDN);
        mpfr_mul_ui(e.get(), t.get(), 11, MPFR_RNDN);
        mpfr_div_ui(e.get(), e.get(), 9, MPFR_RNDN);
    }
    out.exponent = mpfr_get_d(e.get(), MPFR_RNDN);
    out.exponent_text = format20(e.get());

    const Seed seed = girth == 6 ? hexagon_seed(p, r) : octagon_seed(r);
    if (N >= seed.vertices) {
        out.plan = girth == 6 ? plan_parameters_hexagon(p, r, N, budget)
                              : plan_parameters_octagon(r, N, budget);
        out.edge_bound = girth == 6 ? edge_bound_hexagon(p, out.plan->m, out.plan->n)
                                          : edge_bound_octagon(out.plan->m, out.plan->n);
    }
    return out;
}

mpz_class parse_decimal(const std::string& text) {
    if (text.empty() || (text.size() > 1 && text[0] == '0'))
        throw PreconditionError("malformed decimal integer '" + text + "'");
    for (char c : text)
        if (c < '0' || c > '9') throw PreconditionError("malformed decimal integer '" + text + "'");
    return mpz_class(text, 10);
}

}  // namespace hgirth::planner
