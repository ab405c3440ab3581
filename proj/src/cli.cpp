#include "hgirth/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hgirth/certificate.hpp"
#include "hgirth/error.hpp"
#include "hgirth/geometry.hpp"
#include "hgirth/pipeline.hpp"
#include "hgirth/planner.hpp"
#include "hgirth/text_format.hpp"

namespace hgirth::cli {

std::size_t oracle_budget_from_env() {
    if (const char* s = std::getenv("HGIRTH_ORACLE_BUDGET")) {
        const mpz_class v = planner::parse_decimal(s);
        if (!v.fits_ulong_p()) throw PreconditionError("HGIRTH_ORACLE_BUDGET out of range");
        return v.get_ui();
    }
    return OracleOptions{}.max_incidences;
}

namespace {

int code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return exit_parse;
        case ErrorKind::precondition: return exit_precondition;
        case ErrorKind::resource: return exit_resource;
        case ErrorKind::verification: return exit_verification;
    }
    return exit_usage;
}

pipeline::Artifact load_artifact(const std::string& path) {
    const std::string text = read_file(path);
    switch (sniff(text)) {
        case FileKind::hypergraph: return parse_hgt(text);
        case FileKind::bipartite: return parse_bgt(text);
        default: throw ParseError(1, path + ": expected an 'hgt 1' or 'bgt 1' file");
    }
}

void save_artifact(const std::string& path, const pipeline::Artifact& a) {
    if (auto g = std::get_if<BipartiteGraph>(&a))
        write_file(path, to_bgt(*g));
    else
        write_file(path, to_hgt(std::get<Hypergraph>(a)));
}

std::string join(const std::vector<VertexId>& xs) {
    std::string s;
    for (auto x : xs) s += " " + std::to_string(x);
    return s;
}

void print_structure(std::ostream& out, const Hypergraph& h) {
    const auto s = validate(h);
    out << "vertices " << s.num_vertices << "\nedges " << s.num_edges << "\nuniformity "
        << (s.uniformity ? std::to_string(*s.uniformity) : s.vacuous_uniformity ? "vacuous" : "none")
        << "\nregularity " << (s.regularity ? std::to_string(*s.regularity) : "none") << "\nisolated "
        << s.isolated_vertices << '\n';
}

struct GenOptions {
    std::string kind, out, report;
    std::size_t q = 2, left = 0, right = 0, deg = 0, girth = 0;
    std::uint64_t seed = 0;
};

struct TransformOptions {
    std::string kind, in, out, templ;
    std::size_t k = 1, r = 0, to = 0;
};

struct GirthOptions {
    std::string in;
    std::size_t oracle_max = 0;
    std::size_t budget = 0;
};

struct PlanOptions {
    int girth = 6;
    std::string p = "2", N, cert;
    std::size_t r = 2, budget = planner::DigitBudget{}.max_digits;
};

struct PipelineOptions {
    std::string recipe, out, report, keep_dir;
    bool timing = false;
};

int do_gen(const GenOptions& o, std::ostream& out) {
    const auto kind = geometry::parse_geometry_kind(o.kind);
    if (!kind) throw PreconditionError("unknown geometry kind '" + o.kind + "'");
    geometry::GeometrySpec spec;
    spec.kind = *kind;
    spec.q = static_cast<std::uint32_t>(o.q);
    spec.greedy = {o.left, o.right, o.deg, o.girth, o.seed};
    const auto gen = geometry::generate(spec);
    write_file(o.out, to_bgt(gen.graph));
    std::ostringstream rep;
    rep << "left " << gen.graph.n_left() << "\nright " << gen.graph.n_right() << "\nincidences "
        << gen.graph.incidences().size() << '\n';
    if (gen.greedy_report) {
        rep << "accepted " << gen.greedy_report->accepted << "\nproposals " << gen.greedy_report->proposals
            << "\nshortfall " << gen.greedy_report->shortfall << "\nright_degree_histogram";
        for (auto c : gen.greedy_report->right_degree_histogram) rep << ' ' << c;
        rep << '\n';
    }
    out << rep.str();
    if (!o.report.empty()) write_file(o.report, rep.str());
    return exit_ok;
}

int do_transform(const TransformOptions& o, std::ostream& out) {
    pipeline::Stage st;
    st.op = o.kind;
    std::vector<std::string> toks;
    if (o.kind == "substitute") toks = {"--template", o.templ, "--k", std::to_string(o.k)};
    if (o.kind == "split") toks = {"--r", std::to_string(o.r)};
    if (o.kind == "pad") toks = {"--to", std::to_string(o.to)};
    st.args = pipeline::StageArgs::parse(toks, 0);
    const auto result = pipeline::apply_stage(st, load_artifact(o.in), ".");
    save_artifact(o.out, result);
    if (auto h = std::get_if<Hypergraph>(&result)) print_structure(out, *h);
    return exit_ok;
}

int do_girth(const GirthOptions& o, std::ostream& out, const Hooks& hooks) {
    const auto art = load_artifact(o.in);
    if (auto g = std::get_if<BipartiteGraph>(&art)) {
        const auto rep = girth_bipartite(*g);
        out << "girth " << rep.girth.to_string() << '\n';
        if (!rep.witness.empty()) {
            out << "witness";
            for (const auto& x : rep.witness) out << ' ' << (x.side == Side::left ? 'L' : 'R') << x.id;
            out << '\n';
        }
        if (o.oracle_max) throw PreconditionError("--oracle-max applies to hypergraph input only");
        return exit_ok;
    }
    const auto& h = std::get<Hypergraph>(art);
    const auto fast = hooks.fast_girth(h);
    out << "girth " << fast.girth.to_string() << '\n';
    if (fast.witness)
        out << "witness vertices" << join(fast.witness->vertices) << " edges" << join(fast.witness->edges) << '\n';
    if (o.oracle_max) {
        OracleOptions opts;
        opts.max_incidences = o.budget ? o.budget : oracle_budget_from_env();
        const auto slow = girth_oracle(h, o.oracle_max, opts).girth;
        out << "oracle " << slow.to_string() << '\n';
        const bool fast_in_range = fast.girth.is_finite() && fast.girth.value() <= o.oracle_max;
        const bool agree = fast_in_range ? slow == fast.girth : slow.is_bounded_search();
        if (!agree || (fast.witness && !is_valid_cycle(h, *fast.witness)))
            throw VerificationError("oracle girth " + slow.to_string() + " disagrees with fast girth " +
                                    fast.girth.to_string());
    }
    return exit_ok;
}

int do_plan(const PlanOptions& o, std::ostream& out) {
    if (o.girth != 6 && o.girth != 8) throw PreconditionError("--girth must be 6 or 8");
    const planner::DigitBudget budget{o.budget};
    const mpz_class p = o.girth == 6 ? planner::parse_decimal(o.p) : mpz_class(2);
    const mpz_class N = planner::parse_decimal(o.N);
    planner::Plan plan;
    try {
        plan = o.girth == 6 ? planner::plan_parameters_hexagon(p, o.r, N, budget)
                            : planner::plan_parameters_octagon(o.r, N, budget);
    } catch (const planner::BelowSeedError& e) {
        out << "below_seed N* " << e.seed_vertices().get_str() << '\n';
        throw;
    }
    const auto cert = planner::certify(o.girth, p, plan.m, plan.n, o.r, budget);
    if (!o.cert.empty()) write_file(o.cert, planner::serialize(cert));
    const auto th = planner::theorem_bound(o.girth, p, N, o.r, budget);
    out << "m " << plan.m << "\nn " << plan.n << "\nseed m* " << plan.seed.m << " n* " << plan.seed.n << " N* "
        << plan.seed.vertices.get_str() << '\n';
    if (const auto* v = cert.value("V_n")) out << "vertices " << *v << '\n';
    if (const auto* v = cert.value("edge_bound")) out << "edge_lower_bound " << *v << '\n';
    if (const auto* v = cert.value("final_edges")) out << "edges " << *v << '\n';
    const mpz_class padding = N - (o.girth == 6 ? planner::hexagon_vertices(p, plan.m, plan.n, budget)
                                                : planner::octagon_vertices(plan.m, plan.n, budget));
    out << "padding " << padding.get_str() << '\n';
    out << "theorem_exponent " << th.exponent_text << '\n';
    if (th.c_derived) out << "c_derived " << *th.c_derived << '\n';
    out << "certificate " << (cert.valid() ? "VALID" : "INVALID") << '\n';
    if (!cert.valid())
        throw VerificationError("certificate INVALID: check " + cert.first_failure()->name + " failed");
    return exit_ok;
}

int do_pipeline(const PipelineOptions& o, std::ostream& out) {
    const std::filesystem::path recipe_path = o.recipe;
    const auto recipe = pipeline::parse_recipe(read_file(recipe_path));
    pipeline::RunOptions ro;
    ro.base_dir = recipe_path.parent_path().empty() ? "." : recipe_path.parent_path();
    if (!o.keep_dir.empty()) ro.keep_dir = o.keep_dir;
    const auto res = pipeline::run_pipeline(recipe, ro);
    const std::string text = pipeline::render_report(res.report, o.timing);
    if (!o.report.empty()) write_file(o.report, text);
    out << text;
    if (!res.report.passed) throw VerificationError(res.report.failure);
    if (!o.out.empty()) save_artifact(o.out, *res.final);
    return exit_ok;
}

int do_report(const std::string& in, std::ostream& out) {
    const std::string text = read_file(in);
    switch (sniff(text)) {
        case FileKind::hypergraph: {
            const auto h = parse_hgt(text);
            print_structure(out, h);
            out << "girth " << girth_hypergraph(h).girth.to_string() << '\n';
            return exit_ok;
        }
        case FileKind::bipartite: {
            const auto g = parse_bgt(text);
            out << "left " << g.n_left() << "\nright " << g.n_right() << "\nincidences " << g.incidences().size()
                << '\n';
            if (auto br = g.biregularity()) out << "biregular " << br->first << ' ' << br->second << '\n';
            out << "girth " << girth_bipartite(g).girth.to_string() << '\n';
            return exit_ok;
        }
        case FileKind::certificate: {
            const auto cert = planner::parse_certificate(text);
            const bool ok = planner::reverify(cert);
            out << "certificate " << (cert.valid() ? "VALID" : "INVALID") << "\nreverified " << (ok ? "yes" : "no")
                << '\n';
            if (!ok) throw VerificationError("certificate does not re-verify");
            return cert.valid() ? exit_ok : exit_verification;
        }
        case FileKind::unknown: break;
    }
    throw ParseError(1, in + ": unrecognized file header");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    CLI::App app{"Construct and certify high-girth uniform hypergraphs", "hgirth"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* g = app.add_subcommand("gen", "Generate a bipartite incidence graph (bgt)");
    g->add_option("kind", gen.kind, "plane | quadrangle | hexagon | greedy")->required();
    g->add_option("--q", gen.q, "Prime order for geometries");
    g->add_option("--left", gen.left);
    g->add_option("--right", gen.right);
    g->add_option("--deg", gen.deg, "Right degree cap (greedy)");
    g->add_option("--girth", gen.girth, "Target girth (greedy)");
    g->add_option("--seed", gen.seed);
    g->add_option("--out", gen.out)->required();
    g->add_option("--report", gen.report, "Also write the generator report here");

    TransformOptions tr;
    auto* t = app.add_subcommand("transform", "Apply nbhd | substitute | split | pad");
    t->add_option("kind", tr.kind)->required()->check(CLI::IsMember({"nbhd", "substitute", "split", "pad"}));
    t->add_option("--in", tr.in)->required();
    t->add_option("--out", tr.out)->required();
    t->add_option("--template", tr.templ, "edge:<r>, path:<r>:<len>, or an hgt file");
    t->add_option("--k", tr.k, "Template copies per edge");
    t->add_option("--r", tr.r, "Split size");
    t->add_option("--to", tr.to, "Pad vertex count");

    GirthOptions gi;
    auto* gc = app.add_subcommand("girth", "Exact girth with witness");
    gc->add_option("--in", gi.in)->required();
    gc->add_option("--oracle-max", gi.oracle_max, "Cross-check against exhaustive search up to this length");
    gc->add_option("--budget", gi.budget, "Oracle incidence budget (default: $HGIRTH_ORACLE_BUDGET or 2000)");

    PlanOptions pl;
    auto* pc = app.add_subcommand("plan", "Choose (m,n) for N and certify the construction");
    pc->add_option("--girth", pl.girth)->required();
    const CLI::Validator decimal(
        [](std::string& s) -> std::string {
            const bool ok = !s.empty() && (s.size() == 1 || s[0] != '0') &&
                            s.find_first_not_of("0123456789") == std::string::npos;
            return ok ? std::string() : "not a decimal integer: " + s;
        },
        "DECIMAL");
    pc->add_option("--p", pl.p, "Prime base (girth 6)")->check(decimal);
    pc->add_option("--r", pl.r)->required();
    pc->add_option("--N", pl.N, "Vertex count, decimal")->required()->check(decimal);
    pc->add_option("--cert", pl.cert, "Write the certificate here");
    pc->add_option("--digits", pl.budget, "Digit budget for exact expansions");

    PipelineOptions pp;
    auto* pi = app.add_subcommand("pipeline", "Run a recipe");
    pi->add_option("--recipe", pp.recipe)->required();
    pi->add_option("--out", pp.out, "Final artifact");
    pi->add_option("--report", pp.report, "Report file");
    pi->add_option("--keep-dir", pp.keep_dir, "Write every stage output here");
    pi->add_flag("--timing", pp.timing, "Include wall-clock per stage in the report");

    std::string report_in;
    auto* rc = app.add_subcommand("report", "Summarize an hgt/bgt file or re-verify a certificate");
    rc->add_option("--in", report_in)->required();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        const int rc_cli = app.exit(e, out, err);
        return rc_cli == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*g) return do_gen(gen, out);
        if (*t) return do_transform(tr, out);
        if (*gc) return do_girth(gi, out, hooks);
        if (*pc) return do_plan(pl, out);
        if (*pi) return do_pipeline(pp, out);
        if (*rc) return do_report(report_in, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace hgirth::cli
