#pragma once

#include "qdg/matrix.hpp"
#include "qdg/ncpoly.hpp"

#include <vector>

namespace qdg {

/// Images of the Chevalley generators e_i, f_i and k_i = q^{h_i/2}, with q = t^2.
struct GeneratorMatrices {
    ExactMatrix e0, f0, k0;
    ExactMatrix e1, f1, k1;
    Rational t;
    Rational q() const { return t * t; }
};

/// Coproduct convention used for tensor products (K = k^2):
///   Left:  e -> e (x) 1 + K (x) e,   f -> f (x) K^{-1} + 1 (x) f
///   Right: e -> e (x) K + 1 (x) e,   f -> f (x) 1 + K^{-1} (x) f
/// and k -> k (x) k in both.
enum class Coproduct { Left, Right };

/// Two-dimensional evaluation module: e1 = E_{12}, f1 = E_{21},
/// k1 = diag(t, 1/t), e0 = v f1, f0 = e1 / v, k0 = diag(1/t, t).
/// Throws std::domain_error if v = 0 or t in {0, 1, -1}.
GeneratorMatrices evaluation_rep(const Rational& v, const Rational& t);

/// Scalars of the realization A = c0 e0 k0 + cbar0 f0 k0 + eps0 k0^2 and
/// A* = c1 e1 k1 + cbar1 f1 k1 + eps1 k1^2 on sites with spectral parameters v.
struct CoidealParams {
    Rational c0 = 1, c1 = 3, cbar0 = 2, cbar1 = Rational(1, 2);
    Rational eps0 = 1, eps1 = -1;
    Rational t = Rational(3, 2);
    std::vector<Rational> sites{Rational(1)};

    Rational q() const { return t * t; }
    /// rho_i = c_i cbar_i (q + q^{-1})^2.
    Rational rho0() const;
    Rational rho1() const;
    /// Throws std::domain_error: t in {0, 1, -1}, no sites, zero or repeated v.
    void validate() const;
};

/// Generator images on the L-fold tensor product (dimension 2^L).
GeneratorMatrices tensor_rep(const CoidealParams& params, Coproduct coproduct = Coproduct::Left);

struct CoidealPair {
    ExactMatrix A;
    ExactMatrix Astar;
    Rational q;
};

CoidealPair coideal_generators(const CoidealParams& params, Coproduct coproduct = Coproduct::Left);

/// Evaluates both defining relations (with [3]_q at the given q) and returns
/// true iff both vanish. Throws std::invalid_argument on a dimension mismatch.
bool check_qdg(const ExactMatrix& A, const ExactMatrix& Astar, const Rational& q, const Rational& rho0,
               const Rational& rho1);

/// Checks the defining relations of U_q(sl2-hat) (k-commutation, [e_i, f_j],
/// cubic q-Serre) on the given generator images.
bool check_uq_relations(const GeneratorMatrices& g);

/// Substitutes A, A* for the letters and evaluates coefficients at (q, rho0, rho1).
ExactMatrix eval_ncpoly(const NcPoly& x, const ExactMatrix& A, const ExactMatrix& Astar, const Rational& q,
                        const Rational& rho0, const Rational& rho1);
/// As above; throws std::invalid_argument if q differs from the pair's q.
ExactMatrix eval_ncpoly(const NcPoly& x, const CoidealPair& pair, const Rational& q, const Rational& rho0,
                        const Rational& rho1);

}  // namespace qdg
