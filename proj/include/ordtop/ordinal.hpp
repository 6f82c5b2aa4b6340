#ifndef ORDTOP_ORDINAL_HPP
#define ORDTOP_ORDINAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ordtop {

/// Ordinals in Cantor normal form: a sum  w^e1*c1 + w^e2*c2 + ... with the
/// exponents strictly decreasing and every coefficient >= 1.  The empty sum
/// is 0.  Exponents are themselves ordinals, with nesting depth bounded so
/// that notation stays finite.
class Ordinal {
public:
    struct Term {
        std::shared_ptr<const Ordinal> exponent;  // never null
        std::uint64_t coeff = 1;

        const Ordinal& exp() const { return *exponent; }
    };

    static constexpr int kDefaultMaxDepth = 8;

    Ordinal() = default;

    static Ordinal zero() { return Ordinal(); }
    static Ordinal finite(std::uint64_t n);
    static Ordinal omega();
    // w^exp * coeff; coeff >= 1.
    static Ordinal omega_power(const Ordinal& exp, std::uint64_t coeff = 1);
    // Validates CNF invariants and the depth bound.
    static Ordinal from_terms(std::vector<Term> terms, int max_depth = kDefaultMaxDepth);

    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    // Value of a finite ordinal.
    std::uint64_t finite_value() const;
    // Nonzero with no trailing finite part.
    bool is_limit() const;
    // Nonzero with a trailing finite part.
    bool is_successor() const;

    int depth() const;

    Ordinal successor() const;
    // Defined only for successor ordinals.
    Ordinal predecessor() const;
    // CNF ordinal addition (absorbs low terms of the left summand).
    Ordinal plus(const Ordinal& rhs) const;

    // -1, 0, 1
    int compare(const Ordinal& rhs) const;
    bool operator==(const Ordinal& rhs) const { return compare(rhs) == 0; }
    bool operator!=(const Ordinal& rhs) const { return compare(rhs) != 0; }
    bool operator<(const Ordinal& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const Ordinal& rhs) const { return compare(rhs) <= 0; }

    // "0", "7", "w", "w*2", "w^2+3", "w^(w+1)*2+w*3+1", ...
    std::string str() const;

    // Parses the textual syntax above; sums are normalized by CNF addition,
    // so "3+w" parses to w.
    static Ordinal parse(const std::string& text, int max_depth = kDefaultMaxDepth);

private:
    std::vector<Term> terms_;
};

} // namespace ordtop

#endif
