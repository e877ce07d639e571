#include "qdg/qnumbers.hpp"

#include "qdg/errors.hpp"

#include <stdexcept>
#include <string>

namespace qdg {

LaurentPoly qint_base(int n, int base) {
    if (n < 0) throw std::domain_error("q-integer of negative argument " + std::to_string(n));
    if (base < 1) throw std::domain_error("q-integer base exponent must be positive");
    if (n == 0) return LaurentPoly(1);
    std::vector<LaurentPoly::Term> terms;
    for (int i = 0; i < n; ++i) terms.push_back({base * (n - 1 - 2 * i), 1});
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly qint(int n) { return qint_base(n, 1); }

LaurentPoly qfactorial(int n) {
    if (n < 0) throw std::domain_error("q-factorial of negative argument");
    LaurentPoly f = 1;
    for (int i = 2; i <= n; ++i) f *= qint(i);
    return f;
}

LaurentPoly qbinomial(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("q-binomial index out of range: (" + std::to_string(n) + ", " +
                                std::to_string(k) + ")");
    return divide_exact(qfactorial(n), qfactorial(k) * qfactorial(n - k));
}

LaurentPoly beta_s(int s) {
    if (s < 1) throw std::domain_error("beta_s requires s >= 1");
    LaurentPoly direct = LaurentPoly::monomial(2 * s) + LaurentPoly::monomial(-2 * s);
    if (divide_exact(qint_base(2 * s, 2), qint_base(s, 2)) != direct)
        throw IntegrityError("beta_s: division route disagrees at s = " + std::to_string(s));
    return direct;
}

void EigenvalueData::validate() const {
    if (b == 0 || c == 0) throw std::domain_error("eigenvalue data requires b != 0 and c != 0");
    if (q == 0 || q == 1 || q == -1) throw std::domain_error("eigenvalue data requires q not in {0, 1, -1}");
    if (diameter < 0) throw std::domain_error("negative diameter");
}

Rational EigenvalueData::theta(int i) const {
    return alpha + b * pow(q, 2 * i - diameter) + c * pow(q, diameter - 2 * i);
}

bool tridiagonal_vanishing(const TridiagonalParams<Rational>& p, const EigenvalueData& data) {
    for (int i = 0; i + p.step <= data.diameter; ++i) {
        Rational x = data.theta(i), y = data.theta(i + p.step);
        Rational v = x * x - p.beta * x * y + y * y - p.gamma * (x + y) - p.delta;
        if (v != 0) return false;
    }
    return true;
}

TridiagonalParams<Rational> tridiagonal_parameters(int s, const EigenvalueData& data) {
    data.validate();
    if (s < 1) throw std::domain_error("tridiagonal step must be positive");
    if (data.diameter < s + 1)
        throw std::domain_error("diameter " + std::to_string(data.diameter) +
                                " too small to determine parameters at distance " + std::to_string(s));
    TridiagonalParams<Rational> p;
    p.step = s;
    p.beta = beta_s(s).eval(data.q);
    // Unknowns (gamma, delta): gamma * (x+y) + delta = x^2 - beta x y + y^2
    // for the pairs (0, s) and (1, s+1).
    auto row = [&](int i) {
        Rational x = data.theta(i), y = data.theta(i + s);
        return std::pair<Rational, Rational>{x + y, x * x - p.beta * x * y + y * y};
    };
    auto [u0, r0] = row(0);
    auto [u1, r1] = row(1);
    if (u0 == u1) throw IntegrityError("degenerate eigenvalue pairs in tridiagonal_parameters");
    p.gamma = (r0 - r1) / (u0 - u1);
    p.delta = r0 - p.gamma * u0;
    if (!tridiagonal_vanishing(p, data))
        throw IntegrityError("tridiagonal parameters fail to annihilate all eigenvalue pairs");
    return p;
}

std::vector<TridiagonalParams<RingElement>> reduced_parameters(int r) {
    std::vector<TridiagonalParams<RingElement>> out;
    for (int s = 1; s <= r; ++s) {
        LaurentPoly qs = qint_base(s, 2);
        out.push_back({s, RingElement(beta_s(s)), RingElement(), RingElement::rho0() * RingElement(qs * qs)});
    }
    return out;
}

}  // namespace qdg
