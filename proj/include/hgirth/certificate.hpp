#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hgirth/planner.hpp"

namespace hgirth::planner {

enum class CheckMethod { bignum, exponent_exact };

struct Check {
    std::string name;
    std::string statement;
    CheckMethod method = CheckMethod::bignum;
    bool pass = false;
};

/// Machine-checked record that (p, m, n, r) satisfies every inequality the
/// girth-6 (hexagon) or girth-8 (octagon) construction relies on, together
/// with the exact derived sizes.
struct Certificate {
    int girth = 6;
    mpz_class p;
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    std::vector<Check> checks;
    /// Derived quantities in emission order: decimal integers or power expressions.
    std::vector<std::pair<std::string, std::string>> values;

    bool valid() const;
    /// First failing check, or nullptr.
    const Check* first_failure() const;
    const std::string* value(std::string_view name) const;
};

/// Builds the certificate. Assumption violations do not throw; they become
/// failing checks and the certificate is INVALID. Throws ResourceError when
/// a needed expansion exceeds the digit budget.
Certificate certify(int girth, const mpz_class& p, std::uint64_t m, std::uint64_t n,
                    std::uint64_t r, const DigitBudget& budget = {});

/// Line format:
///   cert 1
///   value <girth|p|m|n|r> <decimal>              parameters
///   check <name> <PASS|FAIL> <bignum|exponent-exact>
///   value <name> <decimal-or-power-expr>         derived quantities
///   status <VALID|INVALID>
std::string serialize(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

/// Recomputes the certificate from its own parameters and compares every
/// check and value line. Reads nothing but the certificate.
bool reverify(const Certificate& cert, const DigitBudget& budget = {});

std::string to_string(CheckMethod method);

}  // namespace hgirth::planner
