#include "ordtop/json_io.hpp"

#include "ordtop/errors.hpp"

namespace ordtop::io {

namespace {

const json& expect(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string expect_string(const json& j, const char* what) {
    if (!j.is_string()) throw ValidationError(std::string("expected a string for ") + what);
    return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw ValidationError(std::string("expected an array for ") + what);
    std::vector<std::string> out;
    for (const auto& e : j) out.push_back(expect_string(e, what));
    return out;
}

} // namespace

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    return parse_rational(expect_string(j, "a rational"));
}

json to_json(const FinOrder& order) { return json{{"labels", order.labels()}}; }

FinOrder fin_order_from_json(const json& j) {
    return FinOrder(string_list(expect(j, "labels"), "labels"));
}

json to_json(const MonotoneMap& m, bool embed_orders) {
    json graph = json::array();
    for (const auto& [in, out] : m.graph) graph.push_back(json::array({in, out}));
    json j{{"graph", std::move(graph)}, {"extension", to_string(m.extension)}};
    if (embed_orders) {
        j["domain"] = to_json(m.domain);
        j["codomain"] = to_json(m.codomain);
    }
    return j;
}

MonotoneMap monotone_map_from_json(const json& j, const FinOrder& domain,
                                   const FinOrder& codomain) {
    MonotoneMap m;
    m.domain = domain;
    m.codomain = codomain;
    const json& graph = expect(j, "graph");
    if (!graph.is_array()) throw ValidationError("graph must be an array of pairs");
    for (const auto& pair : graph) {
        if (!pair.is_array() || pair.size() != 2)
            throw ValidationError("graph entries must be [input, output] pairs");
        m.graph.emplace_back(expect_string(pair[0], "a graph input"),
                             expect_string(pair[1], "a graph output"));
    }
    if (j.contains("extension"))
        m.extension = parse_extension(expect_string(j.at("extension"), "extension"));
    return m;
}

MonotoneMap monotone_map_from_json(const json& j) {
    return monotone_map_from_json(j, fin_order_from_json(expect(j, "domain")),
                                  fin_order_from_json(expect(j, "codomain")));
}

json to_json(const LexPoint& p) {
    json j = json::array();
    for (const auto& c : p.coords()) j.push_back(to_string(c));
    return j;
}

LexPoint lex_point_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("a point must be an array of rationals");
    std::vector<Rational> coords;
    for (const auto& c : j) coords.push_back(rational_from_json(c));
    return LexPoint(std::move(coords));
}

json to_json(const std::vector<LexPoint>& points) {
    json j = json::array();
    for (const auto& p : points) j.push_back(to_json(p));
    return j;
}

std::vector<LexPoint> lex_points_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected an array of points");
    std::vector<LexPoint> out;
    for (const auto& p : j) out.push_back(lex_point_from_json(p));
    return out;
}

json to_json(const MixedPoint& p) {
    if (p.is_atom) return json{{"atom", p.index}};
    return json{{"segment", p.index}, {"pos", to_string(p.position)}};
}

MixedPoint mixed_point_from_json(const json& j) {
    if (j.contains("atom")) return MixedPoint::atom(j.at("atom").get<std::size_t>());
    if (j.contains("segment"))
        return MixedPoint::segment(j.at("segment").get<std::size_t>(),
                                   rational_from_json(expect(j, "pos")));
    throw ValidationError("a mixed-interval point needs 'atom' or 'segment'");
}

json to_json(const FinSpace& space) {
    json nbhd = json::object();
    for (const auto& p : space.points()) nbhd[p] = space.min_nbhd(p);
    return json{{"points", space.points()}, {"min_nbhd", std::move(nbhd)}};
}

FinSpace fin_space_from_json(const json& j) {
    std::vector<std::string> points = string_list(expect(j, "points"), "points");
    if (j.contains("opens")) {
        const json& opens = j.at("opens");
        if (!opens.is_array()) throw ValidationError("opens must be an array of subsets");
        std::vector<std::vector<std::string>> sets;
        for (const auto& o : opens) sets.push_back(string_list(o, "an open set"));
        return FinSpace::from_opens(std::move(points), sets);
    }
    const json& nbhd = expect(j, "min_nbhd");
    std::vector<std::uint64_t> masks(points.size(), 0);
    auto index_of = [&points](const std::string& label) -> std::size_t {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == label) return i;
        throw ValidationError("min_nbhd mentions unknown point: " + label);
    };
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!nbhd.contains(points[i]))
            throw ValidationError("min_nbhd missing point: " + points[i]);
        for (const auto& member : string_list(nbhd.at(points[i]), "a neighborhood"))
            masks[i] |= std::uint64_t{1} << index_of(member);
    }
    return FinSpace(std::move(points), std::move(masks));
}

json to_json(const SpaceMap& m) {
    json assignment = json::object();
    for (std::size_t i = 0; i < m.source.size(); ++i)
        assignment[m.source.point_at(i)] = m.target.point_at(m.apply(i));
    return json{{"source", to_json(m.source)},
                {"target", to_json(m.target)},
                {"assignment", std::move(assignment)}};
}

SpaceMap space_map_from_json(const json& j) {
    return space_map_from_json(j, fin_space_from_json(expect(j, "source")),
                               fin_space_from_json(expect(j, "target")));
}

SpaceMap space_map_from_json(const json& j, const FinSpace& source, const FinSpace& target) {
    const json& assignment = expect(j, "assignment");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [k, v] : assignment.items())
        pairs.emplace_back(k, expect_string(v, "an assignment value"));
    return SpaceMap::from_labels(source, target, pairs);
}

json to_json(const HomotopyCertificate& cert) {
    json chain = json::array();
    for (const auto& m : cert.chain) chain.push_back(to_json(m));
    json tags = json::array();
    for (auto t : cert.tags) tags.push_back(t == StepTag::Up ? "up" : "down");
    return json{{"chain", std::move(chain)}, {"tags", std::move(tags)}};
}

HomotopyCertificate certificate_from_json(const json& j) {
    HomotopyCertificate cert;
    for (const auto& m : expect(j, "chain")) cert.chain.push_back(space_map_from_json(m));
    for (const auto& t : expect(j, "tags")) {
        std::string tag = expect_string(t, "a step tag");
        if (tag == "up")
            cert.tags.push_back(StepTag::Up);
        else if (tag == "down")
            cert.tags.push_back(StepTag::Down);
        else
            throw ValidationError("unknown step tag: " + tag);
    }
    return cert;
}

json to_json(const EmbeddingTrace& trace) {
    json entries = json::array();
    for (const auto& e : trace.entries) {
        json steps = json::array();
        for (const auto& s : e.steps)
            steps.push_back(json{{"coord", s.coord},
                                 {"lower", to_string(s.lower)},
                                 {"upper", to_string(s.upper)},
                                 {"value", to_string(s.value)},
                                 {"saturated", s.saturated}});
        entries.push_back(json{{"label", e.label}, {"steps", std::move(steps)}});
    }
    return json{{"labels", trace.base.labels()},
                {"sequence", trace.sequence},
                {"dims", trace.dims},
                {"grid", trace.grid.str()},
                {"entries", std::move(entries)}};
}

EmbeddingTrace trace_from_json(const json& j) {
    EmbeddingTrace trace;
    trace.base = FinOrder(string_list(expect(j, "labels"), "labels"));
    trace.sequence = string_list(expect(j, "sequence"), "sequence");
    trace.dims = expect(j, "dims").get<std::size_t>();
    trace.grid = GridPolicy::parse(expect_string(expect(j, "grid"), "grid"));
    for (const auto& e : expect(j, "entries")) {
        TraceEntry entry;
        entry.label = expect_string(expect(e, "label"), "an entry label");
        for (const auto& s : expect(e, "steps")) {
            CoordStep step;
            step.coord = expect(s, "coord").get<std::size_t>();
            step.lower = rational_from_json(expect(s, "lower"));
            step.upper = rational_from_json(expect(s, "upper"));
            step.value = rational_from_json(expect(s, "value"));
            step.saturated = expect(s, "saturated").get<bool>();
            entry.steps.push_back(std::move(step));
        }
        trace.entries.push_back(std::move(entry));
    }
    return trace;
}

json to_json(const BreakpointSet& breaks) {
    return json{{"ambient_dims", breaks.ambient().dims}, {"atoms", to_json(breaks.atoms())}};
}

BreakpointSet breakpoints_from_json(const json& j) {
    LexInterval ambient{expect(j, "ambient_dims").get<std::size_t>()};
    return BreakpointSet(ambient, lex_points_from_json(expect(j, "atoms")));
}

json to_json(const CellMap& map) {
    json j;
    if (map.has_geometry()) {
        j["ambient_dims"] = map.geometry().ambient().dims;
        j["atoms"] = to_json(map.geometry().atoms());
    } else {
        j["mixed_atoms"] = map.atom_count();
    }
    j["cspace"] = to_json(map.cspace());
    j["target"] = to_json(map.target());
    json values = json::object();
    for (std::size_t c = 0; c < map.cell_count(); ++c) {
        CellRef cell = map.cell_at(c);
        std::string prefix =
            (cell.kind == CellRef::Kind::Atom ? "atom:" : "gap:") + std::to_string(cell.index);
        for (std::size_t u = 0; u < map.cspace().size(); ++u)
            values[prefix + "|" + map.cspace().point_at(u)] = map.value_label(cell, u);
    }
    j["values"] = std::move(values);
    return j;
}

CellMap cell_map_from_json(const json& j) {
    FinSpace cspace = fin_space_from_json(expect(j, "cspace"));
    FinSpace target = fin_space_from_json(expect(j, "target"));
    CellMap map;
    if (j.contains("mixed_atoms")) {
        map = CellMap::on_mixed(MixedInterval{j.at("mixed_atoms").get<std::size_t>()},
                                std::move(cspace), std::move(target));
    } else {
        LexInterval ambient{expect(j, "ambient_dims").get<std::size_t>()};
        BreakpointSet breaks(ambient, lex_points_from_json(expect(j, "atoms")));
        map = CellMap::on_interval(std::move(breaks), std::move(cspace), std::move(target));
    }
    for (const auto& [key, value] : expect(j, "values").items()) {
        auto colon = key.find(':');
        auto bar = key.find('|');
        if (colon == std::string::npos || bar == std::string::npos || bar < colon)
            throw ValidationError("bad cell value key: " + key + " (want atom:i|u or gap:i|u)");
        std::string kind = key.substr(0, colon);
        std::size_t index = 0;
        try {
            index = static_cast<std::size_t>(std::stoull(key.substr(colon + 1, bar - colon - 1)));
        } catch (const std::exception&) {
            throw ValidationError("bad cell index in key: " + key);
        }
        CellRef cell;
        if (kind == "atom")
            cell = CellRef::atom(index);
        else if (kind == "gap")
            cell = CellRef::gap(index);
        else
            throw ValidationError("bad cell kind in key: " + key);
        if (CellMap::linear_index(cell) >= map.cell_count())
            throw ValidationError("cell key out of range: " + key);
        map.set_value(cell, key.substr(bar + 1), expect_string(value, "a cell value"));
    }
    if (!map.total()) throw ValidationError("cell map values incomplete");
    return map;
}

} // namespace ordtop::io
