#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hgirth/girth.hpp"
#include "hgirth/hypergraph.hpp"

namespace hgirth::pipeline {

/// Raises the vertex count to n by adding isolated vertices.
Hypergraph pad(const Hypergraph& h, std::size_t n);

using Artifact = std::variant<BipartiteGraph, Hypergraph>;

/// `--key value` options of one stage or CLI transform. Unknown keys and
/// missing values are errors.
class StageArgs {
public:
    StageArgs() = default;
    static StageArgs parse(const std::vector<std::string>& tokens, std::size_t line);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::string& get(const std::string& key) const;
    std::size_t get_size(const std::string& key) const;
    std::optional<std::size_t> get_size_opt(const std::string& key) const;
    void allow_only(std::initializer_list<const char*> keys, const std::string& where) const;

    /// Canonical "--k v" rendering in insertion order.
    std::string render() const;

private:
    std::map<std::string, std::string> values_;
    std::vector<std::string> order_;
};

struct Stage {
    std::string op;           // gen, load, nbhd, substitute, split, pad, verify
    std::string kind;         // generator kind for gen, file for load
    StageArgs args;
    std::size_t line = 0;
};

/// Flat ordered stage list. Lines:
///   # comment
///   target girth <g>
///   stage <op> [<kind>] [--key value]...
struct Recipe {
    std::optional<std::size_t> target_girth;
    std::vector<Stage> stages;
};

Recipe parse_recipe(std::string_view text);

/// Hypergraph templates by name: "edge:<r>" is a single r-edge,
/// "path:<r>:<len>" a linear path; anything else is an hgt file path
/// resolved against base_dir.
Hypergraph resolve_template(const std::string& spec, const std::filesystem::path& base_dir);

/// Applies one transform to an artifact; the single code path shared by
/// pipeline stages and CLI transforms.
Artifact apply_stage(const Stage& stage, const std::optional<Artifact>& input,
                     const std::filesystem::path& base_dir);

struct StageRecord {
    std::size_t index = 0;
    std::string op;
    std::string command;  // equivalent CLI invocation
    std::string output_file;
    std::string shape;    // one-line structure summary
    std::string girth;    // bipartite and/or hypergraph girth summary
    std::optional<std::size_t> hypergraph_girth_lower;  // girth in hypergraph terms (nullopt = inf)
    std::optional<std::size_t> predicted_edges;
    std::size_t actual_edges = 0;
    double millis = 0;
};

struct PipelineReport {
    std::optional<std::size_t> target_girth;
    std::vector<StageRecord> stages;
    bool passed = false;
    std::string failure;
    std::string final_summary;
};

struct RunOptions {
    std::filesystem::path base_dir = ".";
    /// When set, every stage output is written here as stage<i>.<hgt|bgt>.
    std::optional<std::filesystem::path> keep_dir;
};

struct PipelineResult {
    PipelineReport report;
    std::optional<Artifact> final;
};

/// Executes stages in order, checking girth after each. A stage whose girth
/// (in hypergraph terms; half the girth for bipartite stages) drops below
/// the target stops the run with report.passed = false.
PipelineResult run_pipeline(const Recipe& recipe, const RunOptions& options = {});

std::string render_report(const PipelineReport& report, bool include_timing);

}  // namespace hgirth::pipeline
