#include "ordtop/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ordtop/bigmaps.hpp"
#include "ordtop/cardinal.hpp"
#include "ordtop/embedding.hpp"
#include "ordtop/errors.hpp"
#include "ordtop/json_io.hpp"
#include "ordtop/selfcheck.hpp"

namespace ordtop {

namespace {

using nlohmann::json;

const json& need_input(const Manifest& m, const std::string& key) {
    auto it = m.inputs.find(key);
    if (it == m.inputs.end())
        throw ValidationError("manifest for '" + m.command + "' needs input '" + key + "'");
    return it->second;
}

std::string need_option(const Manifest& m, const std::string& key) {
    auto it = m.options.find(key);
    if (it == m.options.end())
        throw ValidationError("manifest for '" + m.command + "' needs option '" + key + "'");
    return it->second;
}

std::string option_or(const Manifest& m, const std::string& key, const std::string& fallback) {
    auto it = m.options.find(key);
    return it == m.options.end() ? fallback : it->second;
}

std::size_t numeric_option(const Manifest& m, const std::string& key) {
    std::string v = need_option(m, key);
    try {
        return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
        throw ValidationError("option '" + key + "' must be a number, got '" + v + "'");
    }
}

AxiomMode mode_of(const Manifest& m) { return parse_axiom_mode(option_or(m, "mode", "zfc")); }

// ---- cardinal ----

DispatchResult cardinal_eval(const Manifest& m) {
    CardinalExpr e = CardinalExpr::parse(need_option(m, "expr"));
    CardinalExpr n = normalize(e, mode_of(m));
    return {kExitOk, json{{"input", e.str()}, {"normal_form", n.str()}}};
}

DispatchResult cardinal_compare(const Manifest& m) {
    CardinalExpr a = CardinalExpr::parse(need_option(m, "lhs"));
    CardinalExpr b = CardinalExpr::parse(need_option(m, "rhs"));
    CompareResult v = compare(a, b, mode_of(m));
    json doc{{"lhs", a.str()}, {"rhs", b.str()}, {"verdict", to_string(v)}};
    return {v == CompareResult::Unknown ? kExitRefusal : kExitOk, doc};
}

DispatchResult cardinal_strong_limit(const Manifest& m) {
    CardinalExpr e = CardinalExpr::parse(need_option(m, "expr"));
    Trivalent v = is_strong_limit(e, mode_of(m));
    json doc{{"input", e.str()}, {"verdict", to_string(v)}};
    return {v == Trivalent::Unknown ? kExitRefusal : kExitOk, doc};
}

DispatchResult cardinal_perfect_bound(const Manifest& m) {
    CardinalExpr e = CardinalExpr::parse(need_option(m, "expr"));
    auto bound = least_perfect_bound(e, mode_of(m));
    if (!bound) return {kExitRefusal, json{{"input", e.str()}, {"verdict", "UNKNOWN"}}};
    return {kExitOk, json{{"input", e.str()}, {"bound", bound->str()}}};
}

// ---- orders ----

MonotoneMap map_input(const Manifest& m, const std::string& key) {
    const json& doc = need_input(m, key);
    if (m.inputs.count("domain") && m.inputs.count("codomain"))
        return io::monotone_map_from_json(doc,
                                          io::fin_order_from_json(need_input(m, "domain")),
                                          io::fin_order_from_json(need_input(m, "codomain")));
    return io::monotone_map_from_json(doc);
}

DispatchResult orders_check(const Manifest& m) {
    ValidationReport rep = validate(map_input(m, "map"));
    json doc{{"ok", rep.ok}};
    if (!rep.ok) {
        doc["message"] = rep.message;
        if (rep.violation)
            doc["violation"] = json::array({rep.violation->first, rep.violation->second});
    }
    return {rep.ok ? kExitOk : kExitRefusal, doc};
}

DispatchResult orders_duality(const Manifest& m) {
    std::string direction = need_option(m, "direction");
    MonotoneMap input = map_input(m, "map");
    if (direction == "from-injection") {
        FinOrder into = m.inputs.count("into")
                            ? io::fin_order_from_json(need_input(m, "into"))
                            : input.domain;
        MonotoneMap g = surjection_from_injection(input, into);
        return {kExitOk, io::to_json(g)};
    }
    if (direction == "from-surjection") {
        MonotoneMap f = injection_from_surjection(input);
        return {kExitOk, io::to_json(f)};
    }
    throw ValidationError("direction must be from-injection or from-surjection");
}

// ---- lexint ----

DispatchResult lexint_compare(const Manifest& m) {
    LexPoint p = io::lex_point_from_json(need_input(m, "p"));
    LexPoint q = io::lex_point_from_json(need_input(m, "q"));
    LexOrder o = lex_compare(p, q);
    const char* verdict = o == LexOrder::Less ? "LT" : o == LexOrder::Greater ? "GT" : "EQ";
    return {kExitOk, json{{"verdict", verdict}}};
}

DispatchResult lexint_sup(const Manifest& m) {
    std::vector<LexPoint> pts = io::lex_points_from_json(need_input(m, "points"));
    return {kExitOk, json{{"sup", io::to_json(sup_finite(pts))},
                          {"inf", io::to_json(inf_finite(pts))}}};
}

DispatchResult lexint_sample(const Manifest& m) {
    LexInterval interval{numeric_option(m, "dims")};
    auto pts = dense_sample(interval, static_cast<unsigned>(numeric_option(m, "depth")));
    return {kExitOk, json{{"count", pts.size()}, {"points", io::to_json(pts)}}};
}

DispatchResult lexint_wedge(const Manifest& m) {
    WedgeImage w = wedge_map(io::lex_point_from_json(need_input(m, "p")));
    return {kExitOk, json{{"copy", w.copy},
                          {"point", io::to_json(w.point)},
                          {"glue", w.is_glue_point()}}};
}

DispatchResult lexint_reverse(const Manifest& m) {
    LexPoint p = io::lex_point_from_json(need_input(m, "p"));
    return {kExitOk, json{{"point", io::to_json(reverse_point(p))}}};
}

// ---- embedding ----

DispatchResult embed_run(const Manifest& m) {
    FinOrder base = io::fin_order_from_json(need_input(m, "order"));
    InsertionOrder order = InsertionOrder::in_base_order(base);
    if (m.inputs.count("insertion")) {
        const json& doc = need_input(m, "insertion");
        const json& seq = doc.is_object() && doc.contains("sequence") ? doc.at("sequence") : doc;
        if (!seq.is_array()) throw ValidationError("insertion sequence must be an array");
        order.sequence.clear();
        for (const auto& l : seq) order.sequence.push_back(l.get<std::string>());
    }
    LexInterval target{numeric_option(m, "dims")};
    GridPolicy grid = GridPolicy::parse(option_or(m, "grid", "exact"));
    EmbeddingResult res = embed_order(order, target, grid);
    json points = json::object();
    for (const auto& [label, p] : res.points) points[label] = io::to_json(p);
    return {kExitOk, json{{"points", std::move(points)}, {"trace", io::to_json(res.trace)}}};
}

DispatchResult embed_replay(const Manifest& m) {
    auto points = replay(io::trace_from_json(need_input(m, "trace")));
    json doc = json::object();
    for (const auto& [label, p] : points) doc[label] = io::to_json(p);
    return {kExitOk, json{{"points", std::move(doc)}}};
}

// ---- quotient ----

DispatchResult quotient_run(const Manifest& m) {
    LexInterval ambient{numeric_option(m, "ambient-dims")};
    BreakpointSet atoms(ambient, io::lex_points_from_json(need_input(m, "atoms")));
    auto [interval, qmap] = quotient_by_breakpoints(atoms);
    json doc{{"atom_count", interval.atom_count},
             {"segment_count", interval.segment_count()},
             {"atoms", io::to_json(atoms.atoms())}};
    if (m.inputs.count("eval")) {
        json images = json::array();
        for (const auto& p : io::lex_points_from_json(need_input(m, "eval")))
            images.push_back(io::to_json(qmap.eval(p)));
        doc["images"] = std::move(images);
    }
    return {kExitOk, doc};
}

// ---- finspace ----

DispatchResult finspace_nbhd(const Manifest& m) {
    FinSpace space = io::fin_space_from_json(need_input(m, "space"));
    std::string point = need_option(m, "point");
    return {kExitOk, json{{"point", point}, {"min_nbhd", space.min_nbhd(point)}}};
}

DispatchResult finspace_classes(const Manifest& m) {
    FinSpace space = io::fin_space_from_json(need_input(m, "space"));
    return {kExitOk, json{{"classes", equiv_classes(space)}}};
}

DispatchResult finspace_t1(const Manifest& m) {
    FinSpace space = io::fin_space_from_json(need_input(m, "space"));
    return {kExitOk, json{{"t1", is_T1(space)}}};
}

DispatchResult finspace_weight(const Manifest& m) {
    FinSpace space = io::fin_space_from_json(need_input(m, "space"));
    return {kExitOk,
            json{{"weight", weight(space)}, {"compact_weight", compact_weight(space)}}};
}

DispatchResult finspace_continuous(const Manifest& m) {
    SpaceMap map = io::space_map_from_json(need_input(m, "map"));
    return {kExitOk, json{{"continuous", is_continuous(map)}}};
}

DispatchResult finspace_homotopy(const Manifest& m) {
    SpaceMap f = io::space_map_from_json(need_input(m, "f"));
    SpaceMap g = io::space_map_from_json(need_input(m, "g"));
    auto outcome = step_homotopy_check(f, g);
    if (!outcome.ok())
        return {kExitRefusal, json{{"homotopic", false}, {"witness", *outcome.witness}}};
    auto check = verify_certificate(*outcome.certificate);
    json doc{{"homotopic", true},
             {"certificate", io::to_json(*outcome.certificate)},
             {"verified", check.ok},
             {"fixed_points", outcome.certificate->fixed_points(0)}};
    return {check.ok ? kExitOk : kExitInternal, doc};
}

// ---- bigmaps ----

DispatchResult bigmaps_check(const Manifest& m) {
    CellMap f = io::cell_map_from_json(need_input(m, "map"));
    ContinuityCheck chk = check_continuity(f);
    json doc{{"continuous", chk.ok}};
    if (!chk.ok) {
        doc["cell"] = chk.cell.str();
        doc["parameter"] = f.cspace().point_at(chk.u);
        doc["detail"] = chk.detail;
    }
    return {kExitOk, doc};
}

DispatchResult bigmaps_concat(const Manifest& m) {
    CellMap f = io::cell_map_from_json(need_input(m, "f"));
    CellMap g = io::cell_map_from_json(need_input(m, "g"));
    return {kExitOk, io::to_json(concat(f, g))};
}

DispatchResult bigmaps_reverse(const Manifest& m) {
    return {kExitOk, io::to_json(reverse(io::cell_map_from_json(need_input(m, "map"))))};
}

DispatchResult bigmaps_reduce(const Manifest& m) {
    CellMap f = io::cell_map_from_json(need_input(m, "map"));
    Reduction r = density_reduce(f);
    return {kExitOk, json{{"quotient_atoms", r.quotient.atom_count},
                          {"p", io::to_json(r.map.source())},
                          {"g", io::to_json(r.reduced)}}};
}

DispatchResult bigmaps_verify(const Manifest& m) {
    CellMap f = io::cell_map_from_json(need_input(m, "map"));
    CellMap g = io::cell_map_from_json(need_input(m, "reduced"));
    auto [interval, qmap] = quotient_by_breakpoints(f.geometry());
    (void)interval;
    bool ok = verify_reduction(f, g, qmap);
    return {ok ? kExitOk : kExitRefusal, json{{"ok", ok}}};
}

// ---- selftest ----

// Canonical fixture documents; ORDTOP_FIXTURE_DIR points selftest at disk
// copies instead.
const std::map<std::string, const char*>& embedded_fixtures() {
    static const std::map<std::string, const char*> fixtures = {
        {"sierpinski_space",
         R"({"points":["0","1"],"min_nbhd":{"0":["0","1"],"1":["1"]}})"},
        {"chain_space",
         R"({"points":["a","b","c"],"opens":[[],["a"],["a","b"],["a","b","c"]]})"},
        {"quotient_line_atoms", R"([["0"],["1/4"],["1/2"],["1"]])"},
        {"quotient_plane_atoms", R"([["0","0"],["1/4","0"],["1/2","0"],["1","1"]])"},
        {"sparse_atoms", R"([["1/4"],["1/3"]])"},
        {"embed_chain", R"({"labels":["a","b","c"]})"},
        {"sierpinski_path",
         R"({"ambient_dims":1,"atoms":[["0"],["1"]],)"
         R"("cspace":{"points":["*"],"min_nbhd":{"*":["*"]}},)"
         R"("target":{"points":["0","1"],"min_nbhd":{"0":["0","1"],"1":["1"]}},)"
         R"("values":{"atom:0|*":"0","gap:0|*":"1","atom:1|*":"0"}})"},
    };
    return fixtures;
}

json load_fixture(const std::string& name, std::vector<std::string>& problems) {
    const char* dir = std::getenv("ORDTOP_FIXTURE_DIR");
    std::string text;
    if (dir != nullptr) {
        std::ifstream in(std::string(dir) + "/" + name + ".json");
        if (!in) {
            problems.push_back("fixture " + name + ": file missing");
            return json();
        }
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        text = embedded_fixtures().at(name);
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        problems.push_back("fixture " + name + ": " + e.what());
        return json();
    }
}

json fixture_report() {
    std::vector<std::string> problems;
    std::map<std::string, json> docs;
    for (const auto& [name, text] : embedded_fixtures()) {
        (void)text;
        docs[name] = load_fixture(name, problems);
    }
    if (problems.empty()) {
        try {
            FinSpace sier = io::fin_space_from_json(docs.at("sierpinski_space"));
            io::fin_space_from_json(docs.at("chain_space"));
            BreakpointSet line(LexInterval{1},
                               io::lex_points_from_json(docs.at("quotient_line_atoms")));
            BreakpointSet plane(LexInterval{2},
                                io::lex_points_from_json(docs.at("quotient_plane_atoms")));
            io::lex_points_from_json(docs.at("sparse_atoms"));
            io::fin_order_from_json(docs.at("embed_chain"));
            CellMap path = io::cell_map_from_json(docs.at("sierpinski_path"));
            if (!check_continuity(path).ok)
                problems.push_back("fixture sierpinski_path: expected a continuous path");
            if (line.size() != 4 || plane.size() != 4)
                problems.push_back("fixture atoms: unexpected atom counts");
            if (weight(sier) != 2) problems.push_back("fixture sierpinski_space: weight != 2");
        } catch (const ValidationError& e) {
            problems.push_back(std::string("fixture validation: ") + e.what());
        }
    }
    json doc{{"checked", embedded_fixtures().size()}, {"ok", problems.empty()}};
    if (!problems.empty()) doc["failures"] = problems;
    return doc;
}

DispatchResult selftest(const Manifest& m) {
    std::string module = option_or(m, "module", "");
    json fixtures = fixture_report();
    std::vector<SuiteResult> suites = run_selfcheck(module);
    json rows = json::array();
    bool all_ok = fixtures.at("ok").get<bool>();
    long passed = 0, failed = 0;
    for (const auto& r : suites) {
        json row{{"criterion", r.criterion},
                 {"name", r.name},
                 {"passed", r.passed},
                 {"failed", r.failed}};
        if (!r.failures.empty()) row["failures"] = r.failures;
        rows.push_back(std::move(row));
        passed += r.passed;
        failed += r.failed;
        all_ok = all_ok && r.ok();
    }
    json doc{{"fixtures", std::move(fixtures)},
             {"suites", std::move(rows)},
             {"passed", passed},
             {"failed", failed},
             {"ok", all_ok}};
    return {all_ok ? kExitOk : kExitInternal, doc};
}

using Handler = DispatchResult (*)(const Manifest&);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"cardinal.eval", cardinal_eval},
        {"cardinal.compare", cardinal_compare},
        {"cardinal.strong-limit", cardinal_strong_limit},
        {"cardinal.perfect-bound", cardinal_perfect_bound},
        {"orders.check", orders_check},
        {"orders.duality", orders_duality},
        {"lexint.compare", lexint_compare},
        {"lexint.sup", lexint_sup},
        {"lexint.sample", lexint_sample},
        {"lexint.wedge", lexint_wedge},
        {"lexint.reverse", lexint_reverse},
        {"embed.run", embed_run},
        {"embed.replay", embed_replay},
        {"quotient.run", quotient_run},
        {"finspace.nbhd", finspace_nbhd},
        {"finspace.classes", finspace_classes},
        {"finspace.t1", finspace_t1},
        {"finspace.weight", finspace_weight},
        {"finspace.continuous", finspace_continuous},
        {"finspace.homotopy", finspace_homotopy},
        {"bigmaps.check", bigmaps_check},
        {"bigmaps.concat", bigmaps_concat},
        {"bigmaps.reverse", bigmaps_reverse},
        {"bigmaps.reduce", bigmaps_reduce},
        {"bigmaps.verify", bigmaps_verify},
        {"selftest", selftest},
    };
    return table;
}

} // namespace

DispatchResult dispatch(const Manifest& manifest) {
    try {
        auto it = handlers().find(manifest.command);
        if (it == handlers().end())
            throw ValidationError("unknown command: " + manifest.command);
        return it->second(manifest);
    } catch (const CapacityError& e) {
        return {kExitRefusal, json{{"error", e.what()}, {"kind", "capacity"}}};
    } catch (const ValidationError& e) {
        return {kExitValidation, json{{"error", e.what()}, {"kind", "validation"}}};
    } catch (const nlohmann::json::exception& e) {
        return {kExitValidation, json{{"error", e.what()}, {"kind", "validation"}}};
    } catch (const std::exception& e) {
        return {kExitInternal, json{{"error", e.what()}, {"kind", "internal"}}};
    }
}

} // namespace ordtop
