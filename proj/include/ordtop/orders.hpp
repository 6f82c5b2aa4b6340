#ifndef ORDTOP_ORDERS_HPP
#define ORDTOP_ORDERS_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ordtop {

/// A finite total order: distinct labels listed from minimum to maximum.
class FinOrder {
public:
    FinOrder() = default;
    explicit FinOrder(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label_at(std::size_t rank) const { return labels_.at(rank); }
    bool contains(const std::string& label) const { return rank_.count(label) != 0; }
    std::size_t rank(const std::string& label) const;

    const std::string& min() const;
    const std::string& max() const;

    bool operator==(const FinOrder& rhs) const { return labels_ == rhs.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> rank_;
};

/// Reversed copy: rank'(x) = n-1-rank(x).
FinOrder reverse(const FinOrder& order);

enum class Extension { None, Sup, Inf };

std::string to_string(Extension e);
Extension parse_extension(const std::string& s);

/// A monotone map given by a finite graph of (input, output) pairs.  The
/// graph may cover only a subset of the domain; the extension policy says
/// how to evaluate elsewhere:
///   Sup:  eval(x) = max{ image(i) : i in graph, i <= x }, codomain min when
///         the set is empty
///   Inf:  dual
///   None: off-graph evaluation is an error
struct MonotoneMap {
    FinOrder domain;
    FinOrder codomain;
    std::vector<std::pair<std::string, std::string>> graph;
    Extension extension = Extension::None;

    std::optional<std::string> image_of(const std::string& input) const;
    std::string eval(const std::string& input) const;
    // Graph inputs sorted by domain rank.
    std::vector<std::string> graph_inputs() const;
};

struct ValidationReport {
    bool ok = true;
    std::string message;
    // First violating pair of graph entries, when monotonicity fails.
    std::optional<std::pair<std::string, std::string>> violation;
};

/// Single-valuedness, label membership and order preservation on the graph.
ValidationReport validate(const MonotoneMap& m);

/// Strict order preservation on the graph (injective monotone).
bool is_strictly_monotone(const MonotoneMap& m);

/// From a strictly monotone injection h : A -> J with A a subset of I,
/// builds the monotone surjection g : J -> I,
///   g(j) = max{ i in A : h(i) <= j },  g(j) = min(I) when the set is empty.
/// The returned graph is total on J with extension Sup.
MonotoneMap surjection_from_injection(const MonotoneMap& h, const FinOrder& into);

/// From a monotone surjection g : J -> I builds the strictly monotone
/// injection f : I -> J, f(t) = max g^{-1}(t).  Satisfies g(f(t)) = t.
MonotoneMap injection_from_surjection(const MonotoneMap& g);

/// Graph composition: apply m1 first, then m2.
MonotoneMap compose(const MonotoneMap& m1, const MonotoneMap& m2);

} // namespace ordtop

#endif
