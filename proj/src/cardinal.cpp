#include "ordtop/cardinal.hpp"

#include <cctype>

#include "ordtop/errors.hpp"

namespace ordtop {

std::string to_string(AxiomMode m) { return m == AxiomMode::ZFC ? "zfc" : "gch"; }

std::string to_string(Trivalent t) {
    switch (t) {
        case Trivalent::True: return "TRUE";
        case Trivalent::False: return "FALSE";
        default: return "UNKNOWN";
    }
}

std::string to_string(CompareResult c) {
    switch (c) {
        case CompareResult::Less: return "LT";
        case CompareResult::Equal: return "EQ";
        case CompareResult::Greater: return "GT";
        default: return "UNKNOWN";
    }
}

AxiomMode parse_axiom_mode(const std::string& s) {
    if (s == "zfc" || s == "ZFC") return AxiomMode::ZFC;
    if (s == "gch" || s == "GCH") return AxiomMode::GCH;
    throw ValidationError("unknown axiom mode: " + s);
}

CardinalExpr CardinalExpr::finite(std::uint64_t n) {
    CardinalExpr e;
    e.kind_ = Kind::Finite;
    e.finite_ = n;
    return e;
}

CardinalExpr CardinalExpr::aleph(Ordinal index) {
    CardinalExpr e;
    e.kind_ = Kind::Aleph;
    e.index_ = std::move(index);
    return e;
}

CardinalExpr CardinalExpr::beth(Ordinal index) {
    CardinalExpr e;
    e.kind_ = Kind::Beth;
    e.index_ = std::move(index);
    return e;
}

CardinalExpr CardinalExpr::pow_set(CardinalExpr arg) {
    CardinalExpr e;
    e.kind_ = Kind::PowSet;
    e.arg_ = std::make_shared<const CardinalExpr>(std::move(arg));
    return e;
}

CardinalExpr CardinalExpr::succ(CardinalExpr arg) {
    CardinalExpr e;
    e.kind_ = Kind::Succ;
    e.arg_ = std::make_shared<const CardinalExpr>(std::move(arg));
    return e;
}

CardinalExpr CardinalExpr::hat_of(CardinalExpr arg) {
    CardinalExpr e;
    e.kind_ = Kind::Hat;
    e.arg_ = std::make_shared<const CardinalExpr>(std::move(arg));
    return e;
}

std::uint64_t CardinalExpr::finite_value() const {
    if (kind_ != Kind::Finite) throw ValidationError("finite_value of a non-finite expression");
    return finite_;
}

const Ordinal& CardinalExpr::index() const {
    if (kind_ != Kind::Aleph && kind_ != Kind::Beth)
        throw ValidationError("index of a non-indexed expression");
    return index_;
}

const CardinalExpr& CardinalExpr::arg() const {
    if (!arg_) throw ValidationError("argument of a leaf expression");
    return *arg_;
}

bool CardinalExpr::equals(const CardinalExpr& rhs) const {
    if (kind_ != rhs.kind_) return false;
    switch (kind_) {
        case Kind::Finite: return finite_ == rhs.finite_;
        case Kind::Aleph:
        case Kind::Beth: return index_ == rhs.index_;
        default: return arg_->equals(*rhs.arg_);
    }
}

std::string CardinalExpr::str() const {
    switch (kind_) {
        case Kind::Finite: return std::to_string(finite_);
        case Kind::Aleph: return "aleph(" + index_.str() + ")";
        case Kind::Beth: return "beth(" + index_.str() + ")";
        case Kind::PowSet: return "pow(" + arg_->str() + ")";
        case Kind::Succ: return "succ(" + arg_->str() + ")";
        case Kind::Hat: return "hat(" + arg_->str() + ")";
    }
    return "?";
}

namespace {

struct CardParser {
    const std::string& s;
    std::size_t pos = 0;

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

    std::string ident() {
        skip_ws();
        std::string out;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
            out += s[pos++];
        return out;
    }

    std::string balanced_parens() {
        if (!eat('(')) throw ValidationError("expected '(' in cardinal expression");
        std::string inner;
        int depth = 1;
        while (pos < s.size()) {
            char c = s[pos++];
            if (c == '(') ++depth;
            if (c == ')' && --depth == 0) return inner;
            inner += c;
        }
        throw ValidationError("missing ')' in cardinal expression");
    }

    CardinalExpr expr(int depth) {
        if (depth > 64) throw ValidationError("cardinal expression nested too deeply");
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::uint64_t v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
                ++pos;
            }
            return CardinalExpr::finite(v);
        }
        std::string name = ident();
        if (name == "aleph") return CardinalExpr::aleph(Ordinal::parse(balanced_parens()));
        if (name == "beth") return CardinalExpr::beth(Ordinal::parse(balanced_parens()));
        if (name == "pow") {
            if (!eat('(')) throw ValidationError("expected '(' after pow");
            CardinalExpr inner = expr(depth + 1);
            if (!eat(')')) throw ValidationError("missing ')' after pow argument");
            return CardinalExpr::pow_set(std::move(inner));
        }
        if (name == "succ") {
            if (!eat('(')) throw ValidationError("expected '(' after succ");
            CardinalExpr inner = expr(depth + 1);
            if (!eat(')')) throw ValidationError("missing ')' after succ argument");
            return CardinalExpr::succ(std::move(inner));
        }
        if (name == "hat") {
            if (!eat('(')) throw ValidationError("expected '(' after hat");
            CardinalExpr inner = expr(depth + 1);
            if (!eat(')')) throw ValidationError("missing ')' after hat argument");
            return CardinalExpr::hat_of(std::move(inner));
        }
        throw ValidationError("unknown cardinal constructor: '" + name + "'");
    }
};

std::uint64_t finite_pow2(std::uint64_t n) {
    if (n > 62) throw ValidationError("finite power-set exponent exceeds 62 during rewriting");
    return std::uint64_t{1} << n;
}

using Kind = CardinalExpr::Kind;

CardinalExpr normalize_rec(const CardinalExpr& e, AxiomMode mode) {
    switch (e.kind()) {
        case Kind::Finite:
            return e;
        case Kind::Aleph:
            return e;
        case Kind::Beth:
            if (mode == AxiomMode::GCH) return CardinalExpr::aleph(e.index());
            if (e.index().is_zero()) return CardinalExpr::aleph(Ordinal::zero());
            return e;
        case Kind::PowSet: {
            CardinalExpr a = normalize_rec(e.arg(), mode);
            if (a.kind() == Kind::Finite) return CardinalExpr::finite(finite_pow2(a.finite_value()));
            if (a.kind() == Kind::Beth)
                return CardinalExpr::beth(a.index().successor());
            if (a.kind() == Kind::Aleph) {
                if (mode == AxiomMode::GCH) return CardinalExpr::aleph(a.index().successor());
                // aleph(0) = beth(0), so its power set is beth(1)
                if (a.index().is_zero()) return CardinalExpr::beth(Ordinal::finite(1));
            }
            return CardinalExpr::pow_set(std::move(a));
        }
        case Kind::Succ: {
            CardinalExpr a = normalize_rec(e.arg(), mode);
            if (a.kind() == Kind::Finite) {
                if (a.finite_value() == std::uint64_t(-1))
                    throw ValidationError("finite successor overflow during rewriting");
                return CardinalExpr::finite(a.finite_value() + 1);
            }
            if (mode == AxiomMode::GCH && a.kind() == Kind::Aleph)
                return CardinalExpr::aleph(a.index().successor());
            return CardinalExpr::succ(std::move(a));
        }
        case Kind::Hat: {
            CardinalExpr a = normalize_rec(e.arg(), mode);
            if (a.kind() == Kind::Finite) {
                std::uint64_t n = a.finite_value();
                return CardinalExpr::finite(n == 0 ? 0 : finite_pow2(n - 1));
            }
            if (a.kind() == Kind::Beth) return a;
            if (a.kind() == Kind::Aleph) {
                if (a.index().is_zero()) return a;
                if (mode == AxiomMode::GCH) return a;
            }
            return CardinalExpr::hat_of(std::move(a));
        }
    }
    throw ValidationError("unreachable cardinal kind");
}

} // namespace

CardinalExpr CardinalExpr::parse(const std::string& text) {
    CardParser p{text, 0};
    CardinalExpr e = p.expr(0);
    p.skip_ws();
    if (p.pos != text.size())
        throw ValidationError("trailing characters in cardinal expression: " + text.substr(p.pos));
    return e;
}

CardinalExpr normalize(const CardinalExpr& e, AxiomMode mode) { return normalize_rec(e, mode); }

namespace detail {

// Derivation rules for strict inequality between normalized ZFC forms.
bool derives_lt(const CardinalExpr& a, const CardinalExpr& b, int fuel) {
    if (fuel <= 0) return false;
    if (a.kind() == Kind::Finite && b.kind() == Kind::Finite)
        return a.finite_value() < b.finite_value();
    if (a.kind() == Kind::Finite) return true;  // finite < infinite
    if (b.kind() == Kind::Finite) return false;

    if (a.kind() == Kind::Aleph && b.kind() == Kind::Aleph) return a.index() < b.index();
    if (a.kind() == Kind::Beth && b.kind() == Kind::Beth) return a.index() < b.index();
    // aleph(i) <= beth(i), and beths are strictly increasing
    if (a.kind() == Kind::Aleph && b.kind() == Kind::Beth) return a.index() < b.index();

    // Cantor: a <= y  =>  a < 2^y; successor: a <= y => a < y+
    if (b.kind() == Kind::PowSet && derives_le(a, b.arg(), fuel - 1)) return true;
    if (b.kind() == Kind::Succ && derives_le(a, b.arg(), fuel - 1)) return true;
    // Hat(y) >= y
    if (b.kind() == Kind::Hat && derives_lt(a, b.arg(), fuel - 1)) return true;
    // Hat(x) <= 2^x
    if (a.kind() == Kind::Hat && derives_lt(CardinalExpr::pow_set(a.arg()), b, fuel - 1))
        return true;
    return false;
}

bool derives_le(const CardinalExpr& a, const CardinalExpr& b, int fuel) {
    if (fuel <= 0) return false;
    if (a.equals(b)) return true;
    if (derives_lt(a, b, fuel - 1)) return true;
    if (a.kind() == Kind::Aleph && b.kind() == Kind::Beth && a.index() <= b.index()) return true;

    // congruences: 2^-, successor and hat are monotone
    if (a.kind() == b.kind() &&
        (a.kind() == Kind::PowSet || a.kind() == Kind::Succ || a.kind() == Kind::Hat) &&
        derives_le(a.arg(), b.arg(), fuel - 1))
        return true;
    // successor minimality: x < b  =>  x+ <= b
    if (a.kind() == Kind::Succ && derives_lt(a.arg(), b, fuel - 1)) return true;
    // sup{2^c : c < x} <= 2^y when x <= y+
    if (a.kind() == Kind::Hat && b.kind() == Kind::PowSet &&
        derives_le(a.arg(), CardinalExpr::succ(b.arg()), fuel - 1))
        return true;
    // b <= Hat(b), b <= b+
    if (b.kind() == Kind::Hat && derives_le(a, b.arg(), fuel - 1)) return true;
    if (b.kind() == Kind::Succ && derives_le(a, b.arg(), fuel - 1)) return true;
    return false;
}

} // namespace detail

CompareResult compare(const CardinalExpr& a, const CardinalExpr& b, AxiomMode mode) {
    CardinalExpr na = normalize(a, mode);
    CardinalExpr nb = normalize(b, mode);
    if (na.equals(nb)) return CompareResult::Equal;
    if (mode == AxiomMode::GCH) {
        // GCH normal forms are finite naturals or alephs: total order.
        if (na.kind() == Kind::Finite && nb.kind() == Kind::Finite)
            return na.finite_value() < nb.finite_value() ? CompareResult::Less
                                                         : CompareResult::Greater;
        if (na.kind() == Kind::Finite) return CompareResult::Less;
        if (nb.kind() == Kind::Finite) return CompareResult::Greater;
        int c = na.index().compare(nb.index());
        return c < 0 ? CompareResult::Less : c > 0 ? CompareResult::Greater : CompareResult::Equal;
    }
    bool ab = detail::derives_le(na, nb);
    bool ba = detail::derives_le(nb, na);
    if (ab && ba) return CompareResult::Equal;
    if (detail::derives_lt(na, nb)) return CompareResult::Less;
    if (detail::derives_lt(nb, na)) return CompareResult::Greater;
    return CompareResult::Unknown;
}

Trivalent is_strong_limit(const CardinalExpr& k, AxiomMode mode) {
    CardinalExpr n = normalize(k, mode);
    if (n.kind() == Kind::Finite) throw ValidationError("is_strong_limit of a finite cardinal");
    if (mode == AxiomMode::GCH) {
        // GCH forms are alephs here
        if (n.index().is_zero() || n.index().is_limit()) return Trivalent::True;
        return Trivalent::False;
    }
    switch (n.kind()) {
        case Kind::Aleph:
            return n.index().is_zero() ? Trivalent::True : Trivalent::Unknown;
        case Kind::Beth:
            return n.index().is_limit() ? Trivalent::True : Trivalent::False;
        case Kind::Succ:
        case Kind::PowSet:
            // 2^b fails at b itself; a successor fails at its predecessor
            return Trivalent::False;
        default:
            return Trivalent::Unknown;
    }
}

CardinalExpr hat(const CardinalExpr& k) {
    CardinalExpr n = normalize(k, AxiomMode::ZFC);
    if (n.kind() == Kind::Finite) throw ValidationError("hat of a finite cardinal");
    return normalize(CardinalExpr::hat_of(n), AxiomMode::ZFC);
}

std::optional<CardinalExpr> least_perfect_bound(const CardinalExpr& k, AxiomMode mode) {
    CardinalExpr n = normalize(k, mode);
    if (n.kind() == Kind::Finite)
        throw ValidationError("least_perfect_bound of a finite cardinal");
    if (mode == AxiomMode::GCH) return n;  // under GCH every infinite cardinal qualifies
    switch (n.kind()) {
        case Kind::Beth:
        case Kind::PowSet:  // 2^k = sup{2^b : b < k+}
        case Kind::Hat:     // already literally of the sup form
            return n;
        case Kind::Aleph:
            if (n.index().is_zero()) return n;  // sup of the finite powers of two
            return std::nullopt;
        default:
            // whether anything of the sup form lives below the next beth is
            // not derivable
            return std::nullopt;
    }
}

} // namespace ordtop
