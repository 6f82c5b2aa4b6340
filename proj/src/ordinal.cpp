#include "ordtop/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "ordtop/errors.hpp"

namespace ordtop {

namespace {

std::shared_ptr<const Ordinal> box(const Ordinal& o) {
    return std::make_shared<const Ordinal>(o);
}

} // namespace

Ordinal Ordinal::finite(std::uint64_t n) {
    Ordinal o;
    if (n > 0) o.terms_.push_back(Term{box(Ordinal()), n});
    return o;
}

Ordinal Ordinal::omega() { return omega_power(finite(1), 1); }

Ordinal Ordinal::omega_power(const Ordinal& exp, std::uint64_t coeff) {
    if (coeff == 0) throw ValidationError("zero coefficient in ordinal term");
    std::vector<Term> terms;
    terms.push_back(Term{box(exp), coeff});
    return from_terms(std::move(terms));
}

Ordinal Ordinal::from_terms(std::vector<Term> terms, int max_depth) {
    Ordinal o;
    o.terms_ = std::move(terms);
    for (std::size_t i = 0; i < o.terms_.size(); ++i) {
        if (!o.terms_[i].exponent) throw ValidationError("null exponent in ordinal term");
        if (o.terms_[i].coeff == 0) throw ValidationError("zero coefficient in ordinal term");
        if (i + 1 < o.terms_.size() &&
            o.terms_[i].exp().compare(o.terms_[i + 1].exp()) <= 0)
            throw ValidationError("ordinal terms not strictly decreasing");
    }
    if (o.depth() > max_depth)
        throw ValidationError("ordinal nesting depth exceeds limit " + std::to_string(max_depth));
    return o;
}

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp().is_zero());
}

std::uint64_t Ordinal::finite_value() const {
    if (!is_finite()) throw ValidationError("finite_value of an infinite ordinal");
    return terms_.empty() ? 0 : terms_[0].coeff;
}

bool Ordinal::is_limit() const {
    return !terms_.empty() && !terms_.back().exp().is_zero();
}

bool Ordinal::is_successor() const {
    return !terms_.empty() && terms_.back().exp().is_zero();
}

int Ordinal::depth() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exp().depth());
    return terms_.empty() ? 0 : d + 1;
}

Ordinal Ordinal::successor() const { return plus(finite(1)); }

Ordinal Ordinal::predecessor() const {
    if (!is_successor()) throw ValidationError("predecessor of a non-successor ordinal");
    Ordinal o = *this;
    if (o.terms_.back().coeff > 1)
        o.terms_.back().coeff -= 1;
    else
        o.terms_.pop_back();
    return o;
}

Ordinal Ordinal::plus(const Ordinal& rhs) const {
    if (rhs.is_zero()) return *this;
    // Terms of the left summand below the leading exponent of the right are
    // absorbed.
    const Ordinal& lead = rhs.terms_.front().exp();
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int c = t.exp().compare(lead);
        if (c > 0) {
            out.push_back(t);
        } else if (c == 0) {
            Term merged = rhs.terms_.front();
            if (merged.coeff > std::numeric_limits<std::uint64_t>::max() - t.coeff)
                throw ValidationError("ordinal coefficient overflow");
            merged.coeff += t.coeff;
            out.push_back(merged);
            out.insert(out.end(), rhs.terms_.begin() + 1, rhs.terms_.end());
            return from_terms(std::move(out));
        } else {
            break;
        }
    }
    out.insert(out.end(), rhs.terms_.begin(), rhs.terms_.end());
    return from_terms(std::move(out));
}

int Ordinal::compare(const Ordinal& rhs) const {
    std::size_t n = std::min(terms_.size(), rhs.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = terms_[i].exp().compare(rhs.terms_[i].exp());
        if (c != 0) return c;
        if (terms_[i].coeff != rhs.terms_[i].coeff)
            return terms_[i].coeff < rhs.terms_[i].coeff ? -1 : 1;
    }
    if (terms_.size() != rhs.terms_.size()) return terms_.size() < rhs.terms_.size() ? -1 : 1;
    return 0;
}

std::string Ordinal::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out += "+";
        first = false;
        if (t.exp().is_zero()) {
            out += std::to_string(t.coeff);
            continue;
        }
        if (t.exp() == finite(1)) {
            out += "w";
        } else if (t.exp().is_finite()) {
            out += "w^" + std::to_string(t.exp().finite_value());
        } else if (t.exp() == omega()) {
            out += "w^w";
        } else {
            out += "w^(" + t.exp().str() + ")";
        }
        if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
    }
    return out;
}

namespace {

struct OrdParser {
    const std::string& s;
    std::size_t pos = 0;
    int max_depth;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::uint64_t number() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ValidationError("expected number in ordinal at position " + std::to_string(pos));
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
                throw ValidationError("ordinal coefficient overflow");
            v = v * 10 + d;
            ++pos;
        }
        return v;
    }

    Ordinal factor() {
        skip_ws();
        if (eat('(')) {
            Ordinal o = sum();
            if (!eat(')')) throw ValidationError("missing ')' in ordinal");
            return o;
        }
        if (pos < s.size() && (s[pos] == 'w' || s[pos] == 'W')) {
            ++pos;
            return Ordinal::omega();
        }
        return Ordinal::finite(number());
    }

    Ordinal term() {
        skip_ws();
        if (pos < s.size() && (s[pos] == 'w' || s[pos] == 'W')) {
            ++pos;
            Ordinal exp = Ordinal::finite(1);
            if (eat('^')) exp = factor();
            std::uint64_t coeff = 1;
            if (eat('*')) coeff = number();
            if (coeff == 0) throw ValidationError("zero coefficient in ordinal term");
            return Ordinal::omega_power(exp, coeff);
        }
        return Ordinal::finite(number());
    }

    Ordinal sum() {
        Ordinal acc = term();
        while (eat('+')) acc = acc.plus(term());
        return acc;
    }
};

} // namespace

Ordinal Ordinal::parse(const std::string& text, int max_depth) {
    OrdParser p{text, 0, max_depth};
    Ordinal o = p.sum();
    p.skip_ws();
    if (p.pos != text.size())
        throw ValidationError("trailing characters in ordinal: " + text.substr(p.pos));
    if (o.depth() > max_depth)
        throw ValidationError("ordinal nesting depth exceeds limit " + std::to_string(max_depth));
    return o;
}

} // namespace ordtop
