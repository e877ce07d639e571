#pragma once

#include "qdg/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdg {

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
/// Stored as terms sorted by increasing exponent; no zero coefficients.
class LaurentPoly {
public:
    struct Term {
        int exponent;
        BigInt coeff;
        bool operator==(const Term&) const = default;
    };

    LaurentPoly() = default;
    LaurentPoly(long constant);  // NOLINT: implicit integer embedding is intended
    explicit LaurentPoly(const BigInt& constant);

    /// c * q^e.
    static LaurentPoly monomial(int exponent, const BigInt& coeff = 1);
    /// Builds from arbitrary (unsorted, possibly repeated or zero) terms.
    static LaurentPoly from_terms(std::vector<Term> terms);
    /// Parses the canonical string grammar (an optional leading sign and
    /// surrounding whitespace are accepted).
    static LaurentPoly parse(std::string_view text);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Smallest/largest exponent; the polynomial must be nonzero.
    int min_exponent() const;
    int max_exponent() const;
    BigInt coeff(int exponent) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& other) const = default;

    /// Substitution q -> q^{-1}.
    LaurentPoly mirrored() const;
    /// Substitution q -> q^k (k != 0).
    LaurentPoly scale_exponents(int k) const;
    /// Invariant under q -> q^{-1}.
    bool is_symmetric() const { return mirrored() == *this; }
    bool has_nonnegative_coeffs() const;

    /// Exact value at q = q_val; throws std::domain_error if q_val = 0.
    Rational eval(const Rational& q_val) const;

    /// Canonical string: decreasing exponents, "c*q^e", q^0 elided, q^1 as "q".
    std::string to_string() const;
    /// LaTeX form such as "q^{4}+3+q^{-4}".
    std::string to_latex() const;

    std::size_t hash() const noexcept;

private:
    std::vector<Term> terms_;
    void normalize();
};

/// Quotient a/b if b divides a exactly in Z[q, q^{-1}], std::nullopt otherwise.
/// Throws std::domain_error if b is zero.
std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b);
/// Quotient a/b; throws IntegrityError when the remainder is nonzero.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly pow(const LaurentPoly& x, unsigned e);

}  // namespace qdg
