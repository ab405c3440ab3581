#include "hgirth/pipeline.hpp"

#include <chrono>
#include <sstream>

#include "hgirth/error.hpp"
#include "hgirth/geometry.hpp"
#include "hgirth/planner.hpp"
#include "hgirth/text_format.hpp"
#include "hgirth/transforms.hpp"

namespace hgirth::pipeline {

Hypergraph pad(const Hypergraph& h, std::size_t n) {
    if (n < h.num_vertices())
        throw PreconditionError("pad: target " + std::to_string(n) + " is below the current " +
                                std::to_string(h.num_vertices()) + " vertices");
    return h.with_num_vertices(n);
}

StageArgs StageArgs::parse(const std::vector<std::string>& tokens, std::size_t line) {
    StageArgs a;
    for (std::size_t i = 0; i < tokens.size(); i += 2) {
        const std::string& k = tokens[i];
        if (k.size() < 3 || k.rfind("--", 0) != 0) throw ParseError(line, "expected --option, got '" + k + "'");
        if (i + 1 >= tokens.size()) throw ParseError(line, "option " + k + " needs a value");
        const std::string key = k.substr(2);
        if (a.values_.count(key)) throw ParseError(line, "option " + k + " given twice");
        a.values_[key] = tokens[i + 1];
        a.order_.push_back(key);
    }
    return a;
}

const std::string& StageArgs::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw PreconditionError("missing option --" + key);
    return it->second;
}

std::size_t StageArgs::get_size(const std::string& key) const {
    const mpz_class v = planner::parse_decimal(get(key));
    if (!v.fits_ulong_p()) throw PreconditionError("option --" + key + " out of range");
    return v.get_ui();
}

std::optional<std::size_t> StageArgs::get_size_opt(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return get_size(key);
}

void StageArgs::allow_only(std::initializer_list<const char*> keys, const std::string& where) const {
    for (const auto& k : order_) {
        bool ok = false;
        for (const char* a : keys) ok = ok || k == a;
        if (!ok) throw PreconditionError(where + ": unknown option --" + k);
    }
}

std::string StageArgs::render() const {
    std::string s;
    for (const auto& k : order_) s += (s.empty() ? "" : " ") + ("--" + k) + " " + values_.at(k);
    return s;
}

namespace {

std::vector<std::string> words(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream is{std::string(line)};
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

const Hypergraph& need_hypergraph(const std::optional<Artifact>& in, const std::string& op) {
    if (!in) throw PreconditionError(op + ": no input");
    if (auto h = std::get_if<Hypergraph>(&*in)) return *h;
    throw PreconditionError(op + " needs a hypergraph input, got a bipartite graph");
}

}  // namespace

Recipe parse_recipe(std::string_view text) {
    Recipe r;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++lineno;
        auto w = words(line);
        if (w.empty() || w[0][0] == '#') continue;
        if (w[0] == "target") {
            if (w.size() != 3 || w[1] != "girth") throw ParseError(lineno, "expected 'target girth <g>'");
            if (r.target_girth) throw ParseError(lineno, "target girth declared twice");
            try {
                r.target_girth = planner::parse_decimal(w[2]).get_ui();
            } catch (const PreconditionError& e) {
                throw ParseError(lineno, e.what());
            }
            continue;
        }
        if (w[0] != "stage" || w.size() < 2) throw ParseError(lineno, "expected 'stage <op> ...'");
        Stage s;
        s.op = w[1];
        s.line = lineno;
        std::size_t first_opt = 2;
        if (s.op == "gen" || s.op == "load") {
            if (w.size() < 3) throw ParseError(lineno, s.op + " needs a kind or file argument");
            s.kind = w[2];
            first_opt = 3;
        } else if (s.op != "nbhd" && s.op != "substitute" && s.op != "split" && s.op != "pad" &&
                   s.op != "verify") {
            throw ParseError(lineno, "unknown stage op '" + s.op + "'");
        }
        s.args = StageArgs::parse({w.begin() + static_cast<std::ptrdiff_t>(first_opt), w.end()}, lineno);
        r.stages.push_back(std::move(s));
    }
    if (r.stages.empty()) throw ParseError(lineno, "recipe has no stages");
    return r;
}

Hypergraph resolve_template(const std::string& spec, const std::filesystem::path& base_dir) {
    auto parts = [&] {
        std::vector<std::string> p;
        std::string cur;
        for (char c : spec) {
            if (c == ':') {
                p.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        p.push_back(cur);
        return p;
    }();
    if (parts[0] == "edge" && parts.size() == 2)
        return transforms::single_edge(planner::parse_decimal(parts[1]).get_ui());
    if (parts[0] == "path" && parts.size() == 3)
        return transforms::linear_path(planner::parse_decimal(parts[1]).get_ui(),
                                       planner::parse_decimal(parts[2]).get_ui());
    return parse_hgt(read_file(base_dir / spec));
}

Artifact apply_stage(const Stage& stage, const std::optional<Artifact>& input,
                     const std::filesystem::path& base_dir) {
    const auto& a = stage.args;
    const std::string& op = stage.op;
    if (op == "gen") {
        const auto kind = geometry::parse_geometry_kind(stage.kind);
        if (!kind) throw PreconditionError("unknown geometry kind '" + stage.kind + "'");
        geometry::GeometrySpec spec;
        spec.kind = *kind;
        if (*kind == geometry::GeometryKind::greedy) {
            a.allow_only({"left", "right", "deg", "girth", "seed"}, "gen greedy");
            spec.greedy = {a.get_size("left"), a.get_size("right"), a.get_size("deg"), a.get_size("girth"),
                           a.has("seed") ? a.get_size("seed") : 0};
        } else {
            a.allow_only({"q"}, "gen " + stage.kind);
            spec.q = static_cast<std::uint32_t>(a.get_size("q"));
        }
        return geometry::generate(spec).graph;
    }
    if (op == "load") {
        a.allow_only({}, "load");
        const std::string text = read_file(base_dir / stage.kind);
        switch (sniff(text)) {
            case FileKind::hypergraph: return parse_hgt(text);
            case FileKind::bipartite: return parse_bgt(text);
            default: throw PreconditionError("load: " + stage.kind + " is neither hgt nor bgt");
        }
    }
    if (op == "nbhd") {
        a.allow_only({}, "nbhd");
        if (!input) throw PreconditionError("nbhd: no input");
        if (auto g = std::get_if<BipartiteGraph>(&*input)) return transforms::neighborhood_hypergraph(*g);
        throw PreconditionError("nbhd needs a bipartite input, got a hypergraph");
    }
    if (op == "substitute") {
        a.allow_only({"template", "k"}, "substitute");
        const Hypergraph& host = need_hypergraph(input, op);
        return transforms::substitute_edges(
            {host, resolve_template(a.get("template"), base_dir), a.has("k") ? a.get_size("k") : 1});
    }
    if (op == "split") {
        a.allow_only({"r"}, "split");
        return transforms::split_edges(need_hypergraph(input, op), a.get_size("r")).graph;
    }
    if (op == "pad") {
        a.allow_only({"to"}, "pad");
        return pad(need_hypergraph(input, op), a.get_size("to"));
    }
    if (op == "verify") {
        a.allow_only({"oracle-max"}, "verify");
        const Hypergraph& h = need_hypergraph(input, op);
        if (auto limit = a.get_size_opt("oracle-max")) {
            const auto fast = girth_hypergraph(h).girth;
            const auto slow = girth_oracle(h, *limit).girth;
            const bool agree = fast.is_finite() && fast.value() <= *limit ? slow == fast : slow.is_bounded_search();
            if (!agree)
                throw VerificationError("verify: oracle girth " + slow.to_string() + " disagrees with " +
                                        fast.to_string());
        }
        return h;
    }
    throw PreconditionError("unknown stage op '" + op + "'");
}

namespace {

std::string opt_str(const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : "-"; }

std::string stage_command(const Stage& s, const std::string& in_file, const std::string& out_file) {
    std::string args = s.args.render();
    auto join = [](std::initializer_list<std::string> parts) {
        std::string r;
        for (const auto& p : parts)
            if (!p.empty()) r += (r.empty() ? "" : " ") + p;
        return r;
    };
    if (s.op == "gen") return join({"hgirth gen", s.kind, args, "--out", out_file});
    if (s.op == "load") return join({"cp", s.kind, out_file});
    if (s.op == "verify") return join({"hgirth girth --in", in_file, args});
    return join({"hgirth transform", s.op, args, "--in", in_file, "--out", out_file});
}

std::optional<std::size_t> predicted_edges(const Stage& s, const std::optional<Artifact>& in,
                                           const std::filesystem::path& base_dir) {
    if (!in) return std::nullopt;
    if (s.op == "nbhd") {
        const auto& g = std::get<BipartiteGraph>(*in);
        std::size_t n = 0;
        for (VertexId v = 0; v < g.n_right(); ++v) n += g.right_degree(v) > 0;
        return n;
    }
    const auto* h = std::get_if<Hypergraph>(&*in);
    if (!h) return std::nullopt;
    if (s.op == "substitute") {
        const auto t = resolve_template(s.args.get("template"), base_dir);
        const std::size_t k = s.args.has("k") ? s.args.get_size("k") : 1;
        return k * t.num_edges() * h->num_edges();
    }
    if (s.op == "split") {
        const std::size_t r = s.args.get_size("r");
        std::size_t n = 0;
        for (const auto& e : h->edges()) n += e.size() / r;
        return n;
    }
    if (s.op == "pad" || s.op == "verify") return h->num_edges();
    return std::nullopt;
}

}  // namespace

PipelineResult run_pipeline(const Recipe& recipe, const RunOptions& options) {
    PipelineResult result;
    auto& report = result.report;
    report.target_girth = recipe.target_girth;
    std::optional<Artifact> current;
    std::string current_file = "-";
    if (options.keep_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*options.keep_dir, ec);
        if (ec) throw PreconditionError("cannot create " + options.keep_dir->string() + ": " + ec.message());
    }
    for (std::size_t i = 0; i < recipe.stages.size(); ++i) {
        const Stage& stage = recipe.stages[i];
        StageRecord rec;
        rec.index = i + 1;
        rec.op = stage.op;
        const std::string where = "stage " + std::to_string(rec.index) + " (" + stage.op + ", recipe line " +
                                  std::to_string(stage.line) + ")";
        const auto t0 = std::chrono::steady_clock::now();
        Artifact out;
        try {
            rec.predicted_edges = predicted_edges(stage, current, options.base_dir);
            out = apply_stage(stage, current, options.base_dir);
        } catch (const Error& e) {
            rethrow_with_context(e, where);
        }
        const bool bip = std::holds_alternative<BipartiteGraph>(out);
        rec.output_file = "stage" + std::to_string(rec.index) + (bip ? ".bgt" : ".hgt");
        rec.command = stage_command(stage, current_file, rec.output_file);

        if (bip) {
            const auto& g = std::get<BipartiteGraph>(out);
            const auto girth = girth_bipartite(g).girth;
            rec.actual_edges = g.n_right();
            rec.shape = "bipartite left " + std::to_string(g.n_left()) + " right " + std::to_string(g.n_right()) +
                        " incidences " + std::to_string(g.incidences().size());
            if (girth.is_finite()) rec.hypergraph_girth_lower = girth.value() / 2;
            rec.girth = "bipartite " + girth.to_string() + " hypergraph " + opt_str(rec.hypergraph_girth_lower);
            if (!girth.is_finite()) rec.girth = "bipartite inf hypergraph inf";
        } else {
            const auto& h = std::get<Hypergraph>(out);
            const auto girth = girth_hypergraph(h).girth;
            const auto s = validate(h);
            rec.actual_edges = h.num_edges();
            rec.shape = "hypergraph vertices " + std::to_string(s.num_vertices) + " edges " +
                        std::to_string(s.num_edges) + " uniformity " + opt_str(s.uniformity) + " regularity " +
                        opt_str(s.regularity) + " isolated " + std::to_string(s.isolated_vertices);
            if (girth.is_finite()) rec.hypergraph_girth_lower = girth.value();
            rec.girth = "hypergraph " + girth.to_string();
        }
        rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

        if (options.keep_dir) {
            const auto path = *options.keep_dir / rec.output_file;
            write_file(path, bip ? to_bgt(std::get<BipartiteGraph>(out)) : to_hgt(std::get<Hypergraph>(out)));
        }
        report.stages.push_back(rec);

        if (rec.predicted_edges && *rec.predicted_edges != rec.actual_edges) {
            report.failure = where + ": predicted " + std::to_string(*rec.predicted_edges) + " edges, got " +
                             std::to_string(rec.actual_edges);
            return result;
        }
        if (recipe.target_girth && rec.hypergraph_girth_lower && *rec.hypergraph_girth_lower < *recipe.target_girth) {
            report.failure = where + ": girth " + std::to_string(*rec.hypergraph_girth_lower) +
                             " is below the target " + std::to_string(*recipe.target_girth);
            return result;
        }
        current = std::move(out);
        current_file = rec.output_file;
    }
    report.passed = true;
    report.final_summary = report.stages.back().shape + "; " + report.stages.back().girth;
    result.final = std::move(current);
    return result;
}

std::string render_report(const PipelineReport& report, bool include_timing) {
    std::ostringstream os;
    os << "report 1\n";
    os << "target_girth " << opt_str(report.target_girth) << '\n';
    for (const auto& s : report.stages) {
        os << "stage " << s.index << ' ' << s.op << '\n';
        os << "  command " << s.command << '\n';
        os << "  output " << s.shape << '\n';
        os << "  girth " << s.girth << '\n';
        os << "  edges predicted " << opt_str(s.predicted_edges) << " actual " << s.actual_edges << '\n';
        if (include_timing) os << "  time_ms " << static_cast<long long>(s.millis + 0.5) << '\n';
    }
    if (report.passed)
        os << "result PASS " << report.final_summary << '\n';
    else
        os << "result FAIL " << report.failure << '\n';
    return os.str();
}

}  // namespace hgirth::pipeline
