#pragma once

#include "qdg/laurent.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace qdg {

/// Monomial rho0^a rho1^b.
struct RhoMonomial {
    unsigned rho0 = 0;
    unsigned rho1 = 0;
    auto operator<=>(const RhoMonomial&) const = default;
};

/// Polynomial in the commuting parameters rho0, rho1 with LaurentPoly
/// coefficients: the scalar ring of every symbolic computation.
class RingElement {
public:
    using Term = std::pair<RhoMonomial, LaurentPoly>;

    RingElement() = default;
    RingElement(long constant);                // NOLINT: implicit embedding
    RingElement(const LaurentPoly& laurent);   // NOLINT: implicit embedding
    RingElement(RhoMonomial mono, LaurentPoly coeff);

    static RingElement rho0(unsigned power = 1);
    static RingElement rho1(unsigned power = 1);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Coefficient of a rho monomial (zero if absent).
    LaurentPoly coeff(RhoMonomial mono) const;
    bool is_rho_free() const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement& operator*=(const RingElement& other) { return *this = *this * other; }
    bool operator==(const RingElement& other) const = default;

    /// Multiplies by c * rho0^k (fast path used by the reducer).
    RingElement scaled(const LaurentPoly& c, unsigned rho0_power) const;
    /// Exchanges rho0 and rho1.
    RingElement swap_rhos() const;
    /// The rho-free component.
    LaurentPoly specialize_rho_zero() const;
    /// Exact substitution; throws std::domain_error if q_val = 0.
    Rational eval(const Rational& q_val, const Rational& rho0_val,
                  const Rational& rho1_val) const;

    /// e.g. "(q^2+1+q^-2)*rho0^2*rho1-rho1+3"; "0" for zero.
    std::string to_string() const;
    std::size_t hash() const noexcept;

private:
    std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
    void add_term(const RhoMonomial& mono, const LaurentPoly& c, bool negate);
};

}  // namespace qdg
