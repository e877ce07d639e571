#pragma once

#include "qdg/laurent.hpp"
#include "qdg/rational.hpp"
#include "qdg/ring_element.hpp"

#include <vector>

namespace qdg {

/// Symmetric q-integer [n]_q = (q^n - q^{-n})/(q - q^{-1}); [0]_q = 1.
/// Throws std::domain_error for n < 0.
LaurentPoly qint(int n);
/// [n]_{q^b}: the q-integer in the base q^b (b >= 1).
LaurentPoly qint_base(int n, int base);
/// [n]_q! with the empty product equal to 1.
LaurentPoly qfactorial(int n);
/// [n choose k]_q by exact division of q-factorials (remainder asserted zero).
/// Throws std::domain_error unless 0 <= k <= n.
LaurentPoly qbinomial(int n, int k);
/// beta_s = q^{2s} + q^{-2s}; cross-checked against [2s]_{q^2}/[s]_{q^2}.
LaurentPoly beta_s(int s);

/// Parameters beta_s, gamma_s, delta_s of the quadratic relating eigenvalues
/// at distance s.
template <class Scalar>
struct TridiagonalParams {
    int step = 0;
    Scalar beta{};
    Scalar gamma{};
    Scalar delta{};
};

/// Eigenvalue sequence theta_i = alpha + b q^{2i-d} + c q^{d-2i}, i = 0..d.
struct EigenvalueData {
    Rational alpha;
    Rational b;
    Rational c;
    int diameter = 0;
    Rational q;

    /// Throws std::domain_error unless b, c != 0 and q not in {0, 1, -1}.
    void validate() const;
    Rational theta(int i) const;
};

/// Determines (beta_s, gamma_s, delta_s) for concrete eigenvalue data:
/// beta_s = q^{2s}+q^{-2s}; gamma_s, delta_s solve the linear system given by
/// two eigenvalue pairs at distance s, and the vanishing of the quadratic is
/// then verified on every pair (IntegrityError otherwise).
/// Requires diameter >= s + 1 (std::domain_error otherwise).
TridiagonalParams<Rational> tridiagonal_parameters(int s, const EigenvalueData& data);

/// True iff theta_i^2 - beta theta_i theta_j + theta_j^2 - gamma (theta_i + theta_j)
/// - delta vanishes for every pair |i - j| = s.
bool tridiagonal_vanishing(const TridiagonalParams<Rational>& params, const EigenvalueData& data);

/// Reduced symbolic parameters for s = 1..r: beta_s, gamma_s = 0,
/// delta_s = rho0 [s]^2_{q^2}.
std::vector<TridiagonalParams<RingElement>> reduced_parameters(int r);

}  // namespace qdg
