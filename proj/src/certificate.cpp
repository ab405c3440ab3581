#include "hgirth/certificate.hpp"

#include <sstream>

namespace hgirth::planner {

namespace {

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::size_t digits(const mpz_class& x) { return mpz_sizeinbase(x.get_mpz_t(), 10); }

unsigned long word(const mpz_class& x, const std::string& what) {
    if (x < 0 || !x.fits_ulong_p()) throw ResourceError(what + ": exponent does not fit a machine word");
    return x.get_ui();
}

class Builder {
public:
    Builder(Certificate& cert, const DigitBudget& budget) : cert_(cert), budget_(budget) {}

    bool check(std::string name, std::string statement, CheckMethod method, bool pass) {
        cert_.checks.push_back({std::move(name), std::move(statement), method, pass});
        return pass;
    }

    void value(std::string name, std::string text) { cert_.values.emplace_back(std::move(name), std::move(text)); }
    void value(std::string name, const mpz_class& x) { value(std::move(name), x.get_str()); }

    void require(double digits, const std::string& where) const { require_budget(digits, budget_, where); }

    // p^e for an integer e, after a budget check attributed to `where`.
    mpz_class power(const mpz_class& p, const mpz_class& e, const std::string& where) const {
        require_budget(approx_digits(p, e), budget_, where);
        return pow_ui(p, word(e, where));
    }

    // x^k after a budget check attributed to `where`.
    mpz_class raise(const mpz_class& x, unsigned k, const std::string& where) const {
        require_budget(static_cast<double>(digits(x)) * k, budget_, where);
        return pow_ui(x, k);
    }

private:
    Certificate& cert_;
    const DigitBudget& budget_;
};

struct Family {
    unsigned growth;      // Q_i = base * Q_{i-1}^growth
    unsigned root;        // common denominator of the fractional exponents: 8 or 9
    unsigned edge_power;  // power used to clear the edge-bound denominator: 64 or 72
    mpz_class copies;     // template copies per edge: p-1 or 1
};

std::string idx(const char* stem, std::uint64_t i) { return std::string(stem) + "_" + std::to_string(i); }

void certify_common(Builder& b, const Certificate& c, const Family& fam) {
    const mpz_class& p = c.p;
    const bool hexagon = c.girth == 6;
    auto v_of = [&](const mpz_class& q) { return hexagon ? HexagonParams{q}.v() : OctagonParams{q}.v(); };
    auto b_of = [&](const mpz_class& q) { return hexagon ? HexagonParams{q}.b() : OctagonParams{q}.b(); };
    auto exponent = [&](std::uint64_t i) { return hexagon ? q_exponent(c.m, i) : q_prime_exponent(c.m, i); };

    std::vector<mpz_class> Q, V, B, E;
    mpz_class rec = c.m;
    for (std::uint64_t i = 1; i <= c.n; ++i) {
        if (i > 1) rec = fam.growth * rec + 1;
        const mpq_class closed = exponent(i);
        b.check(idx("closed_form_Q", i), "closed-form exponent of Q_i equals the recursion",
                CheckMethod::exponent_exact, closed == mpq_class(rec));
        if (!hexagon)
            b.check(idx("odd_exponent_Q", i), "Q'_i is an odd power of 2", CheckMethod::exponent_exact,
                    rec % 2 != 0);
        // b(Q_i) is the largest of Q_i, v(Q_i), b(Q_i): about Q_i^(growth+2).
        b.require(approx_digits(p, rec * (fam.growth + 2)), idx("b_Q", i));
        Q.push_back(b.power(p, rec, idx("Q", i)));
        V.push_back(v_of(Q.back()));
        B.push_back(b_of(Q.back()));
        b.value(idx("Q", i), PowerExpr(p, mpq_class(rec)).to_string());
        b.value(idx("v_Q", i), V.back());
        b.value(idx("b_Q", i), B.back());
    }

    for (std::uint64_t i = 2; i <= c.n; ++i) {
        const mpz_class need = fam.copies * V[i - 2];
        b.check(idx("copies_fit", i), "1 + Q_i >= copies * v(Q_{i-1})", CheckMethod::bignum, 1 + Q[i - 1] >= need);
        b.check(idx("ratio", i), "Q_i >= copies * v(Q_{i-1})", CheckMethod::bignum, Q[i - 1] >= need);
    }

    for (std::uint64_t i = 1; i <= c.n; ++i) {
        const mpz_class& q = Q[i - 1];
        const mpz_class& v = V[i - 1];
        const mpz_class top = b.raise(q, fam.growth, idx("vertex_ratio", i));
        if (hexagon)
            b.check(idx("vertex_ratio", i), "(p-1) v(Q_i) <= p Q_i^9", CheckMethod::bignum,
                    (p - 1) * v <= p * top);
        else
            b.check(idx("vertex_ratio", i), "v'(Q'_i) <= 2 Q'_i^10", CheckMethod::bignum, v <= 2 * top);
        // v(Q_i) < p^{g^i (m + 1/root)} raised to the root-th power.
        mpz_class g_pow;
        mpz_ui_pow_ui(g_pow.get_mpz_t(), fam.growth, i);
        const mpz_class rhs_exp = g_pow * (fam.root * mpz_class(c.m) + 1);
        const mpz_class rhs = b.power(p, rhs_exp, idx("vertex_bound", i));
        const mpz_class lhs = b.raise(v, fam.root, idx("vertex_bound", i));
        b.check(idx("vertex_bound", i),
                hexagon ? "v(Q_i)^8 < p^{9^i (8m+1)}" : "v'(Q'_i)^9 < 2^{10^i (9m+1)}",
                CheckMethod::bignum, lhs < rhs);
    }

    E.push_back(B[0]);
    b.value("E_1", E.back());
    for (std::uint64_t i = 2; i <= c.n; ++i) {
        E.push_back(fam.copies * E.back() * B[i - 1]);
        b.value(idx("E", i), E.back());
    }
    const mpz_class& edges = E.back();

    const PowerExpr bound = hexagon ? edge_bound_hexagon(p, c.m, c.n) : edge_bound_octagon(c.m, c.n);
    const mpq_class scaled = bound.exponent() * fam.edge_power;
    const mpz_class bound_pow = b.power(p, scaled.get_num(), "edge_bound");
    b.check("edge_bound", hexagon ? "|E_n|^64 >= p^{64 * (11/8)(9^n(m+1/8) - (n+m+1/8))}"
                                  : "|E_n|^72 >= 2^{72 * (11/9)(10^n(m+1/9) - (n+m+1/9))}",
            CheckMethod::bignum, b.raise(edges, fam.edge_power, "edge_bound") >= bound_pow);

    const mpz_class split = (1 + pow_ui(p, word(mpz_class(c.m), "split"))) / c.r;
    b.check("split_factor", "floor((1+p^m)/r) >= 1", CheckMethod::bignum, split >= 1);
    const mpz_class final_edges = split * edges;
    b.check("final_edge_bound", "(split * |E_n|)^k >= bound^k", CheckMethod::bignum,
            b.raise(final_edges, fam.edge_power, "final_edge_bound") >= bound_pow);

    b.value("V_n", V.back());
    b.value("E_n", edges);
    b.value("edge_bound", bound.to_string());
    b.value("split_factor", split);
    b.value("final_edges", final_edges);
    if (hexagon) b.value("epsilon", epsilon(c.m, c.n).get_str());
}

}  // namespace

bool Certificate::valid() const { return !checks.empty() && first_failure() == nullptr; }

const Check* Certificate::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

const std::string* Certificate::value(std::string_view name) const {
    for (const auto& [k, v] : values)
        if (k == name) return &v;
    return nullptr;
}

std::string to_string(CheckMethod method) {
    return method == CheckMethod::bignum ? "bignum" : "exponent-exact";
}

Certificate certify(int girth, const mpz_class& p, std::uint64_t m, std::uint64_t n, std::uint64_t r,
                    const DigitBudget& budget) {
    if (girth != 6 && girth != 8) throw PreconditionError("girth must be 6 or 8");
    Certificate cert;
    cert.girth = girth;
    cert.p = girth == 8 ? mpz_class(2) : p;
    cert.m = m;
    cert.n = n;
    cert.r = r;
    Builder b(cert, budget);

    bool ok = b.check("n_positive", "n >= 1", CheckMethod::bignum, n >= 1);
    const mpz_class pm = pow_ui(cert.p, m);
    if (girth == 6) {
        ok &= b.check("p_prime", "p is prime", CheckMethod::bignum, mpz_probab_prime_p(p.get_mpz_t(), 50) != 0);
        ok &= b.check("m_at_least_2", "m >= 2", CheckMethod::bignum, m >= 2);
        ok &= b.check("p_pow_m_minus_1_at_least_5", "p^(m-1) >= 5", CheckMethod::bignum,
                      m >= 1 && pow_ui(cert.p, m - 1) >= 5);
    } else {
        ok &= b.check("m_odd", "m is odd", CheckMethod::bignum, m % 2 == 1);
        ok &= b.check("m_at_least_5", "m >= 5", CheckMethod::bignum, m >= 5);
    }
    ok &= b.check("r_in_range", "2 <= r <= 1 + p^m", CheckMethod::bignum, r >= 2 && r <= pm + 1);
    if (!ok) return cert;

    if (girth == 6)
        certify_common(b, cert, Family{9, 8, 64, p - 1});
    else
        certify_common(b, cert, Family{10, 9, 72, 1});
    return cert;
}

std::string serialize(const Certificate& cert) {
    std::ostringstream os;
    os << "cert 1\n";
    os << "value girth " << cert.girth << '\n';
    os << "value p " << cert.p.get_str() << '\n';
    os << "value m " << cert.m << '\n';
    os << "value n " << cert.n << '\n';
    os << "value r " << cert.r << '\n';
    for (const auto& c : cert.checks)
        os << "check " << c.name << ' ' << (c.pass ? "PASS" : "FAIL") << ' ' << to_string(c.method) << '\n';
    for (const auto& [k, v] : cert.values) os << "value " << k << ' ' << v << '\n';
    os << "status " << (cert.valid() ? "VALID" : "INVALID") << '\n';
    return os.str();
}

Certificate parse_certificate(std::string_view text) {
    Certificate cert;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool have_status = false;
    int params = 0;
    auto fail = [&](const std::string& why) { throw ParseError(lineno, why); };
    auto u64 = [&](const std::string& s) {
        try {
            const mpz_class x = parse_decimal(s);
            if (!x.fits_ulong_p()) fail("parameter out of range: " + s);
            return static_cast<std::uint64_t>(x.get_ui());
        } catch (const PreconditionError& e) {
            fail(e.what());
        }
        return std::uint64_t{0};
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (have_status) fail("content after status line");
        std::istringstream ls(line);
        std::vector<std::string> f;
        for (std::string w; ls >> w;) f.push_back(w);
        if (lineno == 1) {
            if (line != "cert 1") fail("expected header 'cert 1'");
            continue;
        }
        if (f.empty()) fail("empty line");
        if (f[0] == "value" && f.size() == 3) {
            if (params < 5) {
                static const char* order[] = {"girth", "p", "m", "n", "r"};
                if (f[1] != order[params]) fail(std::string("expected parameter ") + order[params]);
                switch (params++) {
                    case 0: cert.girth = static_cast<int>(u64(f[2])); break;
                    case 1: cert.p = mpz_class(f[2], 10); break;
                    case 2: cert.m = u64(f[2]); break;
                    case 3: cert.n = u64(f[2]); break;
                    case 4: cert.r = u64(f[2]); break;
                }
            } else {
                cert.values.emplace_back(f[1], f[2]);
            }
        } else if (f[0] == "check" && f.size() == 4) {
            if (f[2] != "PASS" && f[2] != "FAIL") fail("check status must be PASS or FAIL");
            if (f[3] != "bignum" && f[3] != "exponent-exact") fail("unknown check method " + f[3]);
            cert.checks.push_back({f[1], {}, f[3] == "bignum" ? CheckMethod::bignum : CheckMethod::exponent_exact,
                                   f[2] == "PASS"});
        } else if (f[0] == "status" && f.size() == 2) {
            if (f[1] != (cert.valid() ? "VALID" : "INVALID")) fail("status line disagrees with checks");
            have_status = true;
        } else {
            fail("unrecognized line");
        }
    }
    if (params < 5) throw ParseError(lineno, "missing parameters");
    if (!have_status) throw ParseError(lineno, "missing status line");
    return cert;
}

bool reverify(const Certificate& cert, const DigitBudget& budget) {
    const Certificate fresh = certify(cert.girth, cert.p, cert.m, cert.n, cert.r, budget);
    return serialize(fresh) == serialize(cert);
}

}  // namespace hgirth::planner
