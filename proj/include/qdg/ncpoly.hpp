#pragma once

#include "qdg/ring_element.hpp"
#include "qdg/word.hpp"

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qdg {

/// Element of the free algebra on {A, A*} over RingElement. Terms are kept
/// sorted in CanonicalOrder with nonzero coefficients.
class NcPoly {
public:
    using Term = std::pair<Word, RingElement>;

    NcPoly() = default;
    NcPoly(const RingElement& scalar);  // NOLINT: scalar times the unit word
    NcPoly(const Word& w, RingElement coeff = RingElement(1));
    static NcPoly from_terms(std::vector<Term> terms);

    static NcPoly A() { return NcPoly(Word::letter(Letter::A)); }
    static NcPoly Astar() { return NcPoly(Word::letter(Letter::Astar)); }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    RingElement coeff(const Word& w) const;

    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& other);
    NcPoly& operator-=(const NcPoly& other);
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator*(const RingElement& c, const NcPoly& x);
    bool operator==(const NcPoly&) const = default;

    /// Terms joined by " + " / " - "; compound coefficients parenthesized.
    /// The output is accepted by parse_expression.
    std::string to_string() const;

private:
    std::vector<Term> terms_;
    friend class NcAccumulator;
    friend NcPoly dagger(const NcPoly& x);
};

NcPoly ncpoly_mul(const NcPoly& a, const NcPoly& b);

/// The automorphism A <-> A*, rho0 <-> rho1.
NcPoly dagger(const NcPoly& x);

/// Hash-map accumulator for building large NcPoly values.
class NcAccumulator {
public:
    void add(const Word& w, const RingElement& c);
    void add(const NcPoly& x);
    std::size_t size() const noexcept { return map_.size(); }
    NcPoly finish();

private:
    std::unordered_map<Word, RingElement, WordHash> map_;
};

/// Parses the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := cfactor* factor*     (at least one of either)
///   factor := ('A' | 'A*') ['^' uint]
///   cfactor:= integer | 'q' ['^' int] | 'rho0' ['^' uint] | 'rho1' ['^' uint]
///           | '[' uint ']_q' | '(' expr-of-scalars ')'
/// Factors are separated by whitespace or an optional '*'. "A*" denotes the
/// second generator only when '*' immediately follows 'A'.
/// Throws ParseError (with position) on syntax errors and exponent overflow.
NcPoly parse_expression(std::string_view text);

/// Parses a scalar (ring element) expression with the same coefficient grammar.
RingElement parse_scalar(std::string_view text);

}  // namespace qdg
