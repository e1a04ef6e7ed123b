#include <gammahom/cli.hpp>

#include <gammahom/catalog.hpp>
#include <gammahom/error.hpp>
#include <gammahom/hom.hpp>
#include <gammahom/io.hpp>
#include <gammahom/quotient.hpp>
#include <gammahom/rearrange.hpp>
#include <gammahom/verify.hpp>

#include <CLI11.hpp>

#include <functional>
#include <string>
#include <vector>

namespace gammahom {

namespace {

/// Arguments starting with '{' or '[' are inline JSON, anything else is a path.
auto load_json(const std::string & arg) -> Json
{
    if (! arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        try {
            return Json::parse(arg);
        }
        catch (const Json::exception & e) {
            throw Error{Errc::ParseError, std::string{"inline JSON: "} + e.what()};
        }
    }
    return read_json_file(arg);
}

auto load_digraph(const std::string & arg) -> Digraph { return digraph_from_json(load_json(arg)); }

auto class_kind(const std::string & name) -> ClassKind
{
    auto kind = parse_class_kind(name);
    if (! kind)
        throw CLI::ValidationError{"--class", "unknown class kind '" + name + "'"};
    return *kind;
}

auto hom_mode(const std::string & name) -> HomMode
{
    auto mode = parse_hom_mode(name);
    if (! mode)
        throw CLI::ValidationError{"--mode", "unknown homomorphism mode '" + name + "'"};
    return *mode;
}

auto class_spec(const std::string & kind, std::size_t max_n, std::optional<std::size_t> max_arcs) -> ClassSpec
{
    return {class_kind(kind), max_n, max_arcs};
}

auto count_text(const Count & c) -> std::string { return c.str(); }

auto options_for(unsigned workers, bool with_table = false) -> VerifyOptions
{
    VerifyOptions opts;
    opts.workers = workers;
    opts.with_table = with_table;
    return opts;
}

auto emit(std::ostream & out, const Json & doc) -> void { out << doc.dump() << '\n'; }

auto exit_code_for(Errc code) -> int
{
    switch (code) {
    case Errc::ParseError:
        return ExitParse;
    case Errc::TooLarge:
    case Errc::BoundTooLarge:
        return ExitTooLarge;
    case Errc::InvalidSpec:
        return ExitInvalidSpec;
    default:
        return ExitUsage;
    }
}

auto render_dominance_table(std::ostream & out, const DominanceReport & report) -> void
{
    out << to_string(report.mode) << " over " << to_string(report.spec.kind) << " <= " << report.spec.max_vertices;
    if (report.spec.max_arcs)
        out << " (arcs <= " << *report.spec.max_arcs << ")";
    out << ": " << (report.holds ? "holds" : "fails") << " after " << report.tests << " tests\n";
    if (! report.table.empty()) {
        out << "G\tR\tS\n";
        for (const auto & row : report.table)
            out << to_json_string(row.g) << '\t' << count_text(row.r_count) << '\t' << count_text(row.s_count) << '\n';
    }
    if (report.witness) {
        out << "witness " << to_json_string(report.witness->g) << ": " << count_text(report.witness->r_count) << " > "
            << count_text(report.witness->s_count);
        if (report.witness->xi)
            out << " at xi = " << to_json(*report.witness->xi).dump();
        out << '\n';
    }
}

struct Context {
    std::ostream & out;
    int status = ExitOk;
    unsigned workers = 1;
    std::string format = "json";
};

auto add_format(CLI::App & cmd, Context & ctx, std::vector<std::string> allowed) -> void
{
    cmd.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

auto add_workers(CLI::App & cmd, Context & ctx) -> void
{
    cmd.add_option("--workers", ctx.workers, "Worker threads")->check(CLI::Range(1u, 256u));
}

auto setup_count(CLI::App & app, Context & ctx) -> std::function<void()>
{
    auto * cmd = app.add_subcommand("count", "Count homomorphisms and strict homomorphisms G -> H");
    auto g = std::make_shared<std::string>();
    auto h = std::make_shared<std::string>();
    cmd->add_option("G", *g, "Source digraph (file or inline JSON)")->required();
    cmd->add_option("H", *h, "Target digraph (file or inline JSON)")->required();
    add_workers(*cmd, ctx);
    add_format(*cmd, ctx, {"json", "table"});
    return [cmd, g, h, &ctx] {
        if (! cmd->parsed())
            return;
        auto src = load_digraph(*g);
        auto dst = load_digraph(*h);
        auto hom = count_homs(src, dst, HomMode::All, ctx.workers);
        auto strict = count_homs(src, dst, HomMode::Strict, ctx.workers);
        if (ctx.format == "table") {
            ctx.out << "hom\t" << count_text(hom) << "\nstrict\t" << count_text(strict) << '\n';
            return;
        }
        Json doc;
        doc["hom"] = count_to_json(hom);
        doc["strict"] = count_to_json(strict);
        ctx.out << doc.dump() << '\n';
    };
}

auto setup_verify(CLI::App & app, Context & ctx) -> std::function<void()>
{
    struct Args {
        std::string r, s, kind = "posets", mode = "strict-dominance";
        std::size_t max_n = 3;
        std::optional<std::size_t> max_arcs;
        bool table = false;
    };
    auto args = std::make_shared<Args>();
    auto * cmd = app.add_subcommand("verify", "Decide a dominance relation between R and S over a bounded class");
    cmd->add_option("R", args->r, "Digraph R")->required();
    cmd->add_option("S", args->s, "Digraph S")->required();
    cmd->add_option("--class", args->kind, "Class kind of the test catalog");
    cmd->add_option("--max-n", args->max_n, "Vertex bound of the test catalog")->check(CLI::Range(1u, 8u));
    cmd->add_option("--max-arcs", args->max_arcs, "Arc bound of the test catalog");
    cmd->add_option("--mode", args->mode, "strict-dominance, hom-dominance or gamma-leq")
        ->check(CLI::IsMember({"strict-dominance", "hom-dominance", "gamma-leq"}));
    cmd->add_flag("--table", args->table, "Include the per-test count table");
    add_workers(*cmd, ctx);
    add_format(*cmd, ctx, {"json", "table"});
    return [cmd, args, &ctx] {
        if (! cmd->parsed())
            return;
        auto r = load_digraph(args->r);
        auto s = load_digraph(args->s);
        auto spec = class_spec(args->kind, args->max_n, args->max_arcs);
        auto report = check_dominance(
            *parse_dominance_mode(args->mode), r, s, spec, options_for(ctx.workers, args->table));
        if (ctx.format == "table")
            render_dominance_table(ctx.out, report);
        else
            emit(ctx.out, to_json(report));
        if (! report.holds)
            ctx.status = ExitVerdictFails;
    };
}

auto setup_rearrange(CLI::App & app, Context & ctx) -> std::function<void()>
{
    struct Args {
        std::string spec;
        bool poset = false;
        bool emit_t = false;
        std::optional<std::size_t> verify_bound;
    };
    auto args = std::make_shared<Args>();
    auto * cmd = app.add_subcommand("rearrange", "Validate a rearrangement spec and build S (and T)");
    cmd->add_option("SPEC", args->spec, "Spec file or inline JSON")->required();
    cmd->add_flag("--poset", args->poset, "Also check the convexity and walk conditions and build T");
    cmd->add_flag("--emit-T", args->emit_t, "Emit the transitive hull T; needs a poset R");
    cmd->add_option("--verify-bound", args->verify_bound,
           "Check strict dominance of R by S (and T) over digraphs with at most k vertices")
        ->check(CLI::Range(1u, 8u));
    add_workers(*cmd, ctx);
    add_format(*cmd, ctx, {"json", "dot"});
    return [cmd, args, &ctx] {
        if (! cmd->parsed())
            return;
        auto spec = spec_from_json(load_json(args->spec));
        bool poset_mode = args->poset || args->emit_t;
        auto validation = validate_spec(spec, poset_mode);
        if (poset_mode && ! is_poset(spec.r))
            throw Error{Errc::InvalidSpec, "the transitive hull T is only defined for a poset R"};
        if (! validation.valid()) {
            Json doc;
            doc["validation"] = to_json(validation);
            emit(ctx.out, doc);
            ctx.status = ExitInvalidSpec;
            return;
        }
        auto result = poset_mode ? poset_rearrange(spec) : build_S(spec);

        if (ctx.format == "dot") {
            ctx.out << to_dot(result.s, false, "S");
            if (result.t)
                ctx.out << to_dot(*result.t, true, "T");
            return;
        }

        Json doc;
        doc["validation"] = to_json(validation);
        doc["result"] = to_json(result);
        if (args->verify_bound) {
            ClassSpec c{ClassKind::AllDigraphs, *args->verify_bound};
            auto opts = options_for(ctx.workers);
            Json checks = Json::array();
            auto run = [&](const char * label, const Digraph & target) {
                auto report = check_strict_dominance(spec.r, target, c, opts);
                Json entry;
                entry["pair"] = label;
                entry["class"] = to_json(c);
                entry["verdict"] = report.holds ? "holds" : "fails";
                entry["tests"] = report.tests;
                checks.push_back(entry);
                if (! report.holds)
                    ctx.status = ExitVerdictFails;
            };
            run("R,S", result.s);
            if (result.t)
                run("R,T", *result.t);
            doc["verification"] = checks;
        }
        emit(ctx.out, doc);
    };
}

auto setup_catalog(CLI::App & app, Context & ctx) -> std::function<void()>
{
    struct Args {
        std::string kind;
        std::size_t max_n = 1;
        std::optional<std::size_t> max_arcs;
    };
    auto args = std::make_shared<Args>();
    auto * cmd = app.add_subcommand("catalog", "List one representative per isomorphism class");
    cmd->add_option("KIND", args->kind, "Class kind")->required();
    cmd->add_option("MAX_N", args->max_n, "Vertex bound")->required()->check(CLI::Range(1u, 8u));
    cmd->add_option("--max-arcs", args->max_arcs, "Arc bound");
    add_workers(*cmd, ctx);
    add_format(*cmd, ctx, {"json", "lines", "dot"});
    return [cmd, args, &ctx] {
        if (! cmd->parsed())
            return;
        auto spec = class_spec(args->kind, args->max_n, args->max_arcs);
        auto catalog = generate(spec, CatalogBudget::from_env(), ctx.workers);
        if (ctx.format == "lines") {
            ctx.out << export_catalog(catalog);
            return;
        }
        if (ctx.format == "dot") {
            bool hasse = spec.kind == ClassKind::Posets || spec.kind == ClassKind::StrictPosets;
            for (std::size_t i = 0; i < catalog.size(); ++i)
                ctx.out << to_dot(catalog[i], hasse, "G" + std::to_string(i));
            return;
        }
        Json doc;
        doc["class"] = to_json(spec);
        doc["count"] = catalog.size();
        Json list = Json::array();
        for (const auto & g : catalog)
            list.push_back(to_json(g));
        doc["digraphs"] = list;
        emit(ctx.out, doc);
    };
}

auto setup_lovasz(CLI::App & app, Context & ctx) -> std::function<void()>
{
    struct Args {
        std::string object_kind, test_kind, mode = "all";
        std::size_t object_n = 1, test_n = 1;
        std::optional<std::size_t> escalate;
    };
    auto args = std::make_shared<Args>();
    auto * cmd = app.add_subcommand("lovasz", "Check that truncated homomorphism vectors separate a catalog");
    cmd->add_option("OBJECT_KIND", args->object_kind, "Class kind of the objects")->required();
    cmd->add_option("OBJECT_N", args->object_n, "Vertex bound of the objects")->required()->check(CLI::Range(1u, 8u));
    cmd->add_option("TEST_KIND", args->test_kind, "Class kind of the tests")->required();
    cmd->add_option("TEST_N", args->test_n, "Vertex bound of the tests")->required()->check(CLI::Range(1u, 8u));
    cmd->add_option("--mode", args->mode, "all or strict")->check(CLI::IsMember({"all", "strict"}));
    cmd->add_option("--escalate", args->escalate, "Raise the test bound up to this value until all pairs separate")
        ->check(CLI::Range(1u, 8u));
    add_workers(*cmd, ctx);
    add_format(*cmd, ctx, {"json", "table"});
    return [cmd, args, &ctx] {
        if (! cmd->parsed())
            return;
        ClassSpec objects{class_kind(args->object_kind), args->object_n};
        ClassSpec tests{class_kind(args->test_kind), args->test_n};
        auto mode = hom_mode(args->mode);
        auto opts = options_for(ctx.workers);
        auto report = args->escalate ? lovasz_distinguish_escalating(objects, tests, mode, *args->escalate, opts)
                                     : lovasz_distinguish(objects, tests, mode, opts);
        if (ctx.format == "table") {
            for (const auto & pair : report.pairs) {
                ctx.out << pair.first << '\t' << pair.second << '\t';
                if (pair.test_index)
                    ctx.out << to_json_string(report.test_catalog[*pair.test_index]);
                else
                    ctx.out << "undistinguished";
                ctx.out << '\n';
            }
            ctx.out << (report.all_distinguished ? "all pairs distinguished" : "some pairs undistinguished") << '\n';
        }
        else {
            emit(ctx.out, to_json(report));
        }
        if (! report.all_distinguished)
            ctx.status = ExitVerdictFails;
    };
}

auto setup_quotient(CLI::App & app, Context & ctx) -> std::function<void()>
{
    struct Args {
        std::string g, h, map;
    };
    auto args = std::make_shared<Args>();
    auto * cmd = app.add_subcommand("quotient", "Factor a homomorphism through its quotient digraph");
    cmd->add_option("G", args->g, "Source digraph")->required();
    cmd->add_option("H", args->h, "Target digraph")->required();
    cmd->add_option("MAP", args->map, "Homomorphism as a JSON array of images")->required();
    add_format(*cmd, ctx, {"json", "dot"});
    return [cmd, args, &ctx] {
        if (! cmd->parsed())
            return;
        auto g = load_digraph(args->g);
        auto h = load_digraph(args->h);
        auto xi = vertex_map_from_json(load_json(args->map), h.size());
        auto q = quotient_of(g, h, xi);
        if (ctx.format == "dot")
            ctx.out << to_dot(q.digraph(), false, "Q");
        else
            emit(ctx.out, to_json(q));
    };
}

auto setup_theta(CLI::App & app, Context & ctx) -> std::function<void()>
{
    struct Args {
        std::string g, h, h2, map;
    };
    auto args = std::make_shared<Args>();
    auto * cmd = app.add_subcommand("theta", "List the homomorphisms G -> H2 that share the quotient of a map G -> H");
    cmd->add_option("G", args->g, "Source digraph")->required();
    cmd->add_option("H", args->h, "Target of the reference map")->required();
    cmd->add_option("H2", args->h2, "Target of the class")->required();
    cmd->add_option("MAP", args->map, "Reference homomorphism as a JSON array of images")->required();
    add_format(*cmd, ctx, {"json"});
    return [cmd, args, &ctx] {
        if (! cmd->parsed())
            return;
        auto g = load_digraph(args->g);
        auto h = load_digraph(args->h);
        auto h2 = load_digraph(args->h2);
        auto xi = vertex_map_from_json(load_json(args->map), h.size());
        auto q = quotient_of(g, h, xi);
        auto members = theta_class(g, h2, q);
        Json doc;
        doc["quotient"] = to_json(q);
        doc["count"] = members.size();
        Json maps = Json::array();
        for (const auto & m : members)
            maps.push_back(to_json(m));
        doc["maps"] = maps;
        emit(ctx.out, doc);
    };
}

}

auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Homomorphism counting, Γ-scheme verification and poset rearrangement"};
    app.require_subcommand(1);
    Context ctx{out};

    std::vector<std::function<void()>> actions{
        setup_count(app, ctx),
        setup_verify(app, ctx),
        setup_rearrange(app, ctx),
        setup_catalog(app, ctx),
        setup_lovasz(app, ctx),
        setup_quotient(app, ctx),
        setup_theta(app, ctx),
    };

    try {
        app.parse(argc, argv);
        for (auto & action : actions)
            action();
        return ctx.status;
    }
    catch (const CLI::Error & e) {
        return app.exit(e, out, err) == 0 ? ExitOk : ExitUsage;
    }
    catch (const Error & e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return ExitUsage;
    }
}

}
