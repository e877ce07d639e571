#include "qdg/coideal.hpp"

#include "qdg/qnumbers.hpp"
#include "qdg/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdg {

GeneratorMatrices evaluation_rep(const Rational& v, const Rational& t) {
    if (v == 0) throw std::domain_error("spectral parameter must be nonzero");
    if (t == 0 || t == 1 || t == -1) throw std::domain_error("t must not be 0, 1 or -1");
    const ExactMatrix E = ExactMatrix::from_rows({{0, 1}, {0, 0}});
    const ExactMatrix F = ExactMatrix::from_rows({{0, 0}, {1, 0}});
    GeneratorMatrices g;
    g.t = t;
    g.e1 = E;
    g.f1 = F;
    g.k1 = ExactMatrix::diagonal({t, 1 / t});
    g.e0 = v * F;
    g.f0 = (1 / v) * E;
    g.k0 = ExactMatrix::diagonal({1 / t, t});
    return g;
}

Rational CoidealParams::rho0() const {
    Rational s = q() + 1 / q();
    return c0 * cbar0 * s * s;
}

Rational CoidealParams::rho1() const {
    Rational s = q() + 1 / q();
    return c1 * cbar1 * s * s;
}

void CoidealParams::validate() const {
    if (t == 0 || t == 1 || t == -1) throw std::domain_error("t must not be 0, 1 or -1");
    if (sites.empty()) throw std::domain_error("at least one site is required");
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (sites[i] == 0) throw std::domain_error("spectral parameters must be nonzero");
        for (std::size_t j = 0; j < i; ++j)
            if (sites[i] == sites[j]) throw std::domain_error("spectral parameters must be distinct");
    }
}

namespace {

void coproduct_pair(ExactMatrix& e, ExactMatrix& f, const ExactMatrix& k_left, const ExactMatrix& e_site,
                    const ExactMatrix& f_site, const ExactMatrix& k_site, Coproduct cp) {
    const ExactMatrix K = k_left * k_left;
    const ExactMatrix Ks = k_site * k_site;
    const ExactMatrix I = ExactMatrix::identity(e.dim());
    const ExactMatrix I2 = ExactMatrix::identity(2);
    if (cp == Coproduct::Left) {
        e = kron(e, I2) + kron(K, e_site);
        f = kron(f, Ks.inverse()) + kron(I, f_site);
    } else {
        e = kron(e, Ks) + kron(I, e_site);
        f = kron(f, I2) + kron(K.inverse(), f_site);
    }
}

}  // namespace

GeneratorMatrices tensor_rep(const CoidealParams& params, Coproduct coproduct) {
    params.validate();
    GeneratorMatrices g = evaluation_rep(params.sites.front(), params.t);
    for (std::size_t s = 1; s < params.sites.size(); ++s) {
        const GeneratorMatrices h = evaluation_rep(params.sites[s], params.t);
        coproduct_pair(g.e0, g.f0, g.k0, h.e0, h.f0, h.k0, coproduct);
        coproduct_pair(g.e1, g.f1, g.k1, h.e1, h.f1, h.k1, coproduct);
        g.k0 = kron(g.k0, h.k0);
        g.k1 = kron(g.k1, h.k1);
    }
    return g;
}

CoidealPair coideal_generators(const CoidealParams& params, Coproduct coproduct) {
    const GeneratorMatrices g = tensor_rep(params, coproduct);
    CoidealPair out;
    out.A = params.c0 * (g.e0 * g.k0) + params.cbar0 * (g.f0 * g.k0) + params.eps0 * (g.k0 * g.k0);
    out.Astar = params.c1 * (g.e1 * g.k1) + params.cbar1 * (g.f1 * g.k1) + params.eps1 * (g.k1 * g.k1);
    out.q = params.q();
    return out;
}

ExactMatrix eval_ncpoly(const NcPoly& x, const ExactMatrix& A, const ExactMatrix& Astar, const Rational& q,
                        const Rational& rho0, const Rational& rho1) {
    if (A.dim() != Astar.dim()) throw std::invalid_argument("generator matrices differ in dimension");
    ExactMatrix sum(A.dim());
    for (const auto& [w, c] : x.terms()) {
        ExactMatrix m = ExactMatrix::identity(A.dim());
        for (unsigned i = 0; i < w.length(); ++i) m = m * (w.at(i) == Letter::A ? A : Astar);
        sum += c.eval(q, rho0, rho1) * m;
    }
    return sum;
}

ExactMatrix eval_ncpoly(const NcPoly& x, const CoidealPair& pair, const Rational& q, const Rational& rho0,
                        const Rational& rho1) {
    if (q != pair.q) throw std::invalid_argument("q does not match the realization's t^2");
    return eval_ncpoly(x, pair.A, pair.Astar, q, rho0, rho1);
}

bool check_qdg(const ExactMatrix& A, const ExactMatrix& Astar, const Rational& q, const Rational& rho0,
               const Rational& rho1) {
    if (A.dim() != Astar.dim()) throw std::invalid_argument("generator matrices differ in dimension");
    const NcPoly rel = defining_relation();
    return eval_ncpoly(rel, A, Astar, q, rho0, rho1).is_zero() &&
           eval_ncpoly(dagger(rel), A, Astar, q, rho0, rho1).is_zero();
}

bool check_uq_relations(const GeneratorMatrices& g) {
    const Rational q = g.q();
    const ExactMatrix* e[2] = {&g.e0, &g.e1};
    const ExactMatrix* f[2] = {&g.f0, &g.f1};
    const ExactMatrix* k[2] = {&g.k0, &g.k1};
    const LaurentPoly t3 = qint(3);
    const Rational b[4] = {1, t3.eval(q), t3.eval(q), 1};
    for (int i = 0; i < 2; ++i) {
        const ExactMatrix kinv = k[i]->inverse();
        const ExactMatrix K = *k[i] * *k[i];
        if (*k[i] * *k[1 - i] != *k[1 - i] * *k[i]) return false;
        for (int j = 0; j < 2; ++j) {
            const Rational scale = i == j ? q : 1 / q;  // t^{a_ij}, a_ii = 2, a_ij = -2
            if (*k[i] * *e[j] * kinv != scale * *e[j]) return false;
            if (*k[i] * *f[j] * kinv != (1 / scale) * *f[j]) return false;
            ExactMatrix comm = *e[i] * *f[j] - *f[j] * *e[i];
            ExactMatrix expected(K.dim());
            if (i == j) expected = (1 / (q - 1 / q)) * (K - K.inverse());
            if (comm != expected) return false;
            if (i == j) continue;
            ExactMatrix serre_e(K.dim()), serre_f(K.dim());
            for (unsigned m = 0; m <= 3; ++m) {
                const Rational c = (m % 2 == 0 ? 1 : -1) * b[m];
                serre_e += c * (e[i]->pow(3 - m) * *e[j] * e[i]->pow(m));
                serre_f += c * (f[i]->pow(3 - m) * *f[j] * f[i]->pow(m));
            }
            if (!serre_e.is_zero() || !serre_f.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace qdg
