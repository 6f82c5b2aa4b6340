#include "ordtop/orders.hpp"

#include <algorithm>

#include "ordtop/errors.hpp"

namespace ordtop {

FinOrder::FinOrder(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!rank_.emplace(labels_[i], i).second)
            throw ValidationError("duplicate label in order: " + labels_[i]);
    }
}

std::size_t FinOrder::rank(const std::string& label) const {
    auto it = rank_.find(label);
    if (it == rank_.end()) throw ValidationError("unknown label: " + label);
    return it->second;
}

const std::string& FinOrder::min() const {
    if (labels_.empty()) throw ValidationError("minimum of an empty order");
    return labels_.front();
}

const std::string& FinOrder::max() const {
    if (labels_.empty()) throw ValidationError("maximum of an empty order");
    return labels_.back();
}

FinOrder reverse(const FinOrder& order) {
    std::vector<std::string> labels(order.labels().rbegin(), order.labels().rend());
    return FinOrder(std::move(labels));
}

std::string to_string(Extension e) {
    switch (e) {
        case Extension::Sup: return "sup";
        case Extension::Inf: return "inf";
        default: return "none";
    }
}

Extension parse_extension(const std::string& s) {
    if (s == "sup") return Extension::Sup;
    if (s == "inf") return Extension::Inf;
    if (s == "none" || s.empty()) return Extension::None;
    throw ValidationError("unknown extension policy: " + s);
}

std::optional<std::string> MonotoneMap::image_of(const std::string& input) const {
    for (const auto& [in, out] : graph)
        if (in == input) return out;
    return std::nullopt;
}

std::string MonotoneMap::eval(const std::string& input) const {
    if (auto direct = image_of(input)) return *direct;
    std::size_t x = domain.rank(input);
    if (extension == Extension::None)
        throw ValidationError("map is undefined at '" + input + "' (extension none)");
    std::optional<std::size_t> best;
    for (const auto& [in, out] : graph) {
        std::size_t r = domain.rank(in);
        std::size_t v = codomain.rank(out);
        if (extension == Extension::Sup && r <= x) {
            if (!best || v > *best) best = v;
        } else if (extension == Extension::Inf && r >= x) {
            if (!best || v < *best) best = v;
        }
    }
    if (best) return codomain.label_at(*best);
    return extension == Extension::Sup ? codomain.min() : codomain.max();
}

std::vector<std::string> MonotoneMap::graph_inputs() const {
    std::vector<std::string> ins;
    ins.reserve(graph.size());
    for (const auto& [in, out] : graph) ins.push_back(in);
    std::sort(ins.begin(), ins.end(), [&](const std::string& a, const std::string& b) {
        return domain.rank(a) < domain.rank(b);
    });
    return ins;
}

ValidationReport validate(const MonotoneMap& m) {
    ValidationReport rep;
    for (const auto& [in, out] : m.graph) {
        if (!m.domain.contains(in)) {
            rep.ok = false;
            rep.message = "graph input '" + in + "' not in domain";
            return rep;
        }
        if (!m.codomain.contains(out)) {
            rep.ok = false;
            rep.message = "graph output '" + out + "' not in codomain";
            return rep;
        }
    }
    for (std::size_t i = 0; i < m.graph.size(); ++i) {
        for (std::size_t j = i + 1; j < m.graph.size(); ++j) {
            const auto& [xi, yi] = m.graph[i];
            const auto& [xj, yj] = m.graph[j];
            if (xi == xj && yi != yj) {
                rep.ok = false;
                rep.message = "graph not single-valued at '" + xi + "'";
                rep.violation = {xi, xj};
                return rep;
            }
            bool le_dom = m.domain.rank(xi) <= m.domain.rank(xj);
            const auto& lo_in = le_dom ? xi : xj;
            const auto& hi_in = le_dom ? xj : xi;
            const auto& lo_out = le_dom ? yi : yj;
            const auto& hi_out = le_dom ? yj : yi;
            if (m.codomain.rank(lo_out) > m.codomain.rank(hi_out)) {
                rep.ok = false;
                rep.message = "order violated: " + lo_in + " <= " + hi_in + " but " + lo_out +
                              " > " + hi_out;
                rep.violation = {lo_in, hi_in};
                return rep;
            }
        }
    }
    return rep;
}

bool is_strictly_monotone(const MonotoneMap& m) {
    if (!validate(m).ok) return false;
    for (std::size_t i = 0; i < m.graph.size(); ++i)
        for (std::size_t j = i + 1; j < m.graph.size(); ++j)
            if (m.graph[i].first != m.graph[j].first && m.graph[i].second == m.graph[j].second)
                return false;
    return true;
}

MonotoneMap surjection_from_injection(const MonotoneMap& h, const FinOrder& into) {
    if (!is_strictly_monotone(h))
        throw ValidationError("surjection_from_injection requires a strictly monotone injection");
    for (const auto& [in, out] : h.graph)
        if (!into.contains(in))
            throw ValidationError("injection input '" + in + "' not in the containing order");
    // order of A must agree with its order inside `into`
    auto ins = h.graph_inputs();
    for (std::size_t i = 1; i < ins.size(); ++i)
        if (into.rank(ins[i - 1]) >= into.rank(ins[i]))
            throw ValidationError("subset order disagrees with the containing order");

    MonotoneMap g;
    g.domain = h.codomain;
    g.codomain = into;
    g.extension = Extension::Sup;
    for (const auto& j : h.codomain.labels()) {
        std::size_t jr = h.codomain.rank(j);
        std::optional<std::size_t> best;  // rank within `into`
        for (const auto& [i, hi] : h.graph) {
            if (h.codomain.rank(hi) <= jr) {
                std::size_t r = into.rank(i);
                if (!best || r > *best) best = r;
            }
        }
        // empty bound set lands on the minimum
        g.graph.emplace_back(j, best ? into.label_at(*best) : into.min());
    }
    return g;
}

MonotoneMap injection_from_surjection(const MonotoneMap& g) {
    ValidationReport rep = validate(g);
    if (!rep.ok) throw ValidationError("injection_from_surjection: " + rep.message);
    MonotoneMap f;
    f.domain = g.codomain;
    f.codomain = g.domain;
    f.extension = Extension::Sup;
    for (const auto& t : g.codomain.labels()) {
        std::optional<std::size_t> best;
        for (const auto& [s, gs] : g.graph)
            if (gs == t) {
                std::size_t r = g.domain.rank(s);
                if (!best || r > *best) best = r;
            }
        if (!best)
            throw ValidationError("map is not surjective: empty fiber over '" + t + "'");
        f.graph.emplace_back(t, g.domain.label_at(*best));
    }
    return f;
}

MonotoneMap compose(const MonotoneMap& m1, const MonotoneMap& m2) {
    if (!(m1.codomain == m2.domain))
        throw ValidationError("compose: codomain of the first map differs from domain of the second");
    MonotoneMap out;
    out.domain = m1.domain;
    out.codomain = m2.codomain;
    out.extension = m1.extension;
    for (const auto& [x, y] : m1.graph) out.graph.emplace_back(x, m2.eval(y));
    return out;
}

} // namespace ordtop
