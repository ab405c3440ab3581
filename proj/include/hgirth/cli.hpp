#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hgirth/girth.hpp"

namespace hgirth::cli {

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_precondition = 3,
    exit_resource = 4,
    exit_verification = 5,
};

/// Replaceable internals, so tests can corrupt the fast girth path and
/// observe the oracle cross-check failing.
struct Hooks {
    std::function<HypergraphGirthReport(const Hypergraph&)> fast_girth = girth_hypergraph;
};

/// Oracle incidence budget: HGIRTH_ORACLE_BUDGET when set, else the default.
std::size_t oracle_budget_from_env();

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace hgirth::cli
