// Batch front-end: every module operation over JSON files (or one stdin
// document with --json), machine-readable results on stdout, exit codes
// 0 ok / 1 validation / 2 refusal / 3 internal.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ordtop/cli.hpp"
#include "ordtop/errors.hpp"

namespace {

using nlohmann::json;

struct FileInput {
    std::string key;
    std::string path;  // empty when not supplied
};

struct Request {
    ordtop::Manifest manifest;
    std::vector<FileInput> files;
    std::string out_path;
    std::string trace_path;
    bool from_stdin = false;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ordtop::ValidationError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ordtop::ValidationError(path + ": " + e.what());
    }
}

void resolve_inputs(Request& req) {
    if (req.from_stdin) {
        json doc;
        try {
            doc = json::parse(std::cin);
        } catch (const json::parse_error& e) {
            throw ordtop::ValidationError(std::string("stdin: ") + e.what());
        }
        if (!doc.is_object()) throw ordtop::ValidationError("stdin document must be an object");
        for (const auto& f : req.files)
            if (doc.contains(f.key)) req.manifest.inputs[f.key] = doc.at(f.key);
        return;
    }
    for (const auto& f : req.files)
        if (!f.path.empty()) req.manifest.inputs[f.key] = read_json_file(f.path);
}

int emit(const Request& req, const ordtop::DispatchResult& result) {
    json doc = result.document;
    if (!req.trace_path.empty() && doc.is_object() && doc.contains("trace")) {
        std::ofstream out(req.trace_path);
        if (!out) {
            std::cerr << "cannot write " << req.trace_path << "\n";
            return ordtop::kExitValidation;
        }
        out << doc.at("trace").dump(2) << "\n";
        doc.erase("trace");
    }
    if (!req.out_path.empty()) {
        std::ofstream out(req.out_path);
        if (!out) {
            std::cerr << "cannot write " << req.out_path << "\n";
            return ordtop::kExitValidation;
        }
        out << doc.dump(2) << "\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact models of linear orders, lexicographic intervals and finite-space "
                 "homotopy certificates"};
    app.require_subcommand(1);

    Request req;
    app.add_flag("--json", req.from_stdin,
                 "read all input documents from one JSON object on stdin");
    app.add_option("-o,--out", req.out_path, "write the result document to a file");

    // option storage; each leaf copies what it needs into the manifest
    std::string mode = "zfc", expr, lhs, rhs, grid = "exact", point, module;
    std::string dims, depth, ambient_dims;
    bool from_injection = false, from_surjection = false;
    std::string path_map, path_domain, path_codomain, path_into, path_order, path_insertion;
    std::string path_atoms, path_eval, path_space, path_f, path_g, path_p, path_q;
    std::string path_points, path_reduced, path_trace_in;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                    const std::string& command) {
        CLI::App* cmd = parent->add_subcommand(name, desc);
        cmd->callback([&req, command] { req.manifest.command = command; });
        return cmd;
    };

    // cardinal
    auto* cardinal = app.add_subcommand("cardinal", "symbolic cardinal arithmetic");
    cardinal->require_subcommand(1);
    auto with_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode, "axiom mode: zfc or gch")->capture_default_str();
    };
    {
        auto* c = leaf(cardinal, "eval", "normalize an expression", "cardinal.eval");
        c->add_option("expr", expr, "expression, e.g. pow(aleph(0))")->required();
        with_mode(c);
    }
    {
        auto* c = leaf(cardinal, "compare", "three-valued comparison", "cardinal.compare");
        c->add_option("lhs", lhs)->required();
        c->add_option("rhs", rhs)->required();
        with_mode(c);
    }
    {
        auto* c = leaf(cardinal, "strong-limit", "strong limit test", "cardinal.strong-limit");
        c->add_option("expr", expr)->required();
        with_mode(c);
    }
    {
        auto* c = leaf(cardinal, "perfect-bound",
                       "least bound of the form sup{2^b : b < g}", "cardinal.perfect-bound");
        c->add_option("expr", expr)->required();
        with_mode(c);
    }

    // orders
    auto* orders = app.add_subcommand("orders", "finite total orders and monotone maps");
    orders->require_subcommand(1);
    {
        auto* c = leaf(orders, "check", "validate a monotone map", "orders.check");
        c->add_option("-m,--map", path_map, "map document")->required();
        c->add_option("-d,--domain", path_domain);
        c->add_option("-c,--codomain", path_codomain);
    }
    {
        auto* c = leaf(orders, "duality", "injection/surjection constructions", "orders.duality");
        c->add_option("-m,--map", path_map)->required();
        c->add_option("-d,--domain", path_domain);
        c->add_option("-c,--codomain", path_codomain);
        c->add_option("--into", path_into, "containing order for from-injection");
        auto* fi = c->add_flag("--from-injection", from_injection);
        c->add_flag("--from-surjection", from_surjection)->excludes(fi);
    }

    // lexint
    auto* lexint = app.add_subcommand("lexint", "lexicographic interval model");
    lexint->require_subcommand(1);
    {
        auto* c = leaf(lexint, "compare", "compare two points", "lexint.compare");
        c->add_option("p", path_p, "first point document");
        c->add_option("q", path_q, "second point document");
    }
    {
        auto* c = leaf(lexint, "sup", "coordinatewise supremum and infimum", "lexint.sup");
        c->add_option("points", path_points, "array of points");
    }
    {
        auto* c = leaf(lexint, "sample", "eventually-zero dyadic sample", "lexint.sample");
        c->add_option("--dims", dims)->required();
        c->add_option("--depth", depth)->required();
    }
    {
        auto* c = leaf(lexint, "wedge", "image under the wedge epimorphism", "lexint.wedge");
        c->add_option("p", path_p);
    }
    {
        auto* c = leaf(lexint, "reverse", "order reversal", "lexint.reverse");
        c->add_option("p", path_p);
    }

    // embed
    {
        auto* c = leaf(&app, "embed", "order embedding into the lexicographic cube", "embed.run");
        c->add_option("--dims", dims)->required();
        c->add_option("--grid", grid, "exact or dyadic:K")->capture_default_str();
        c->add_option("--order", path_order, "order document")->required();
        c->add_option("--insertion", path_insertion, "insertion sequence document");
        c->add_option("--trace", req.trace_path, "write the replayable trace here");
    }
    {
        auto* c = leaf(&app, "replay", "re-run an embedding trace", "embed.replay");
        c->add_option("trace", path_trace_in, "trace document")->required();
    }

    // quotient
    {
        auto* c = leaf(&app, "quotient", "interval quotient by breakpoints", "quotient.run");
        c->add_option("--ambient-dims", ambient_dims)->required();
        c->add_option("--atoms", path_atoms, "breakpoint document")->required();
        c->add_option("--eval", path_eval, "points to map through the quotient");
    }

    // finspace
    auto* finspace = app.add_subcommand("finspace", "finite topological spaces");
    finspace->require_subcommand(1);
    {
        auto* c = leaf(finspace, "nbhd", "minimal neighborhood", "finspace.nbhd");
        c->add_option("-s,--space", path_space)->required();
        c->add_option("-p,--point", point)->required();
    }
    {
        auto* c = leaf(finspace, "classes", "point classes of the space", "finspace.classes");
        c->add_option("-s,--space", path_space)->required();
    }
    {
        auto* c = leaf(finspace, "t1", "T1 test", "finspace.t1");
        c->add_option("-s,--space", path_space)->required();
    }
    {
        auto* c = leaf(finspace, "weight", "minimal basis size", "finspace.weight");
        c->add_option("-s,--space", path_space)->required();
    }
    {
        auto* c = leaf(finspace, "continuous", "continuity of a map", "finspace.continuous");
        c->add_option("-m,--map", path_map)->required();
    }
    {
        auto* c = leaf(finspace, "homotopy", "one-step homotopy certificate",
                       "finspace.homotopy");
        c->add_option("-f", path_f)->required();
        c->add_option("-g", path_g)->required();
    }

    // bigmaps
    auto* bigmaps = app.add_subcommand("bigmaps", "cellwise paths and density reduction");
    bigmaps->require_subcommand(1);
    {
        auto* c = leaf(bigmaps, "check", "cellwise continuity", "bigmaps.check");
        c->add_option("-m,--map", path_map)->required();
    }
    {
        auto* c = leaf(bigmaps, "concat", "concatenate two paths", "bigmaps.concat");
        c->add_option("-f", path_f)->required();
        c->add_option("-g", path_g)->required();
    }
    {
        auto* c = leaf(bigmaps, "reverse", "reverse a path", "bigmaps.reverse");
        c->add_option("-m,--map", path_map)->required();
    }
    {
        auto* c = leaf(bigmaps, "reduce", "density-reduction pipeline", "bigmaps.reduce");
        c->add_option("-m,--map", path_map)->required();
    }
    {
        auto* c = leaf(bigmaps, "verify", "check a reduction", "bigmaps.verify");
        c->add_option("-m,--map", path_map)->required();
        c->add_option("-r,--reduced", path_reduced)->required();
    }

    // selftest
    {
        auto* c = leaf(&app, "selftest", "run the verification suites", "selftest");
        c->add_option("--module", module, "restrict to one module's suites");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ordtop::kExitOk : ordtop::kExitValidation;
    }

    for (const auto& [key, value] :
         std::initializer_list<std::pair<const char*, const std::string*>>{
             {"mode", &mode},   {"expr", &expr},   {"lhs", &lhs},
             {"rhs", &rhs},     {"grid", &grid},   {"point", &point},
             {"module", &module}, {"dims", &dims}, {"depth", &depth},
             {"ambient-dims", &ambient_dims}}) {
        if (!value->empty()) req.manifest.options[key] = *value;
    }
    if (from_injection) req.manifest.options["direction"] = "from-injection";
    if (from_surjection) req.manifest.options["direction"] = "from-surjection";

    req.files = {{"map", path_map},          {"domain", path_domain},
                 {"codomain", path_codomain}, {"into", path_into},
                 {"order", path_order},       {"insertion", path_insertion},
                 {"atoms", path_atoms},       {"eval", path_eval},
                 {"space", path_space},       {"f", path_f},
                 {"g", path_g},               {"p", path_p},
                 {"q", path_q},               {"points", path_points},
                 {"reduced", path_reduced},   {"trace", path_trace_in}};

    try {
        resolve_inputs(req);
    } catch (const ordtop::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return ordtop::kExitValidation;
    }
    return emit(req, ordtop::dispatch(req.manifest));
}
