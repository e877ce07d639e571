#include "qdg/coideal.hpp"
#include "qdg/matrix.hpp"
#include "qdg/verify.hpp"

#include <doctest.h>

#include <random>

using namespace qdg;

namespace {

Rational q3(const Rational& q) { return q * q + 1 + 1 / (q * q); }

// Direct evaluation of both defining relations, independent of check_qdg.
bool relations_hold(const ExactMatrix& A, const ExactMatrix& B, const Rational& q, const Rational& r0,
                    const Rational& r1) {
    const Rational a = q3(q);
    ExactMatrix one = A * A * A * B - a * (A * A * B * A) + a * (A * B * A * A) - B * A * A * A -
                      r0 * (A * B - B * A);
    ExactMatrix two = B * B * B * A - a * (B * B * A * B) + a * (B * A * B * B) - A * B * B * B -
                      r1 * (B * A - A * B);
    return one.is_zero() && two.is_zero();
}

CoidealParams with_sites(std::vector<Rational> v) {
    CoidealParams p;
    p.sites = std::move(v);
    return p;
}

const std::vector<std::vector<Rational>> kSiteSets{
    {Rational(1)}, {Rational(1), Rational(2)}, {Rational(1), Rational(-3, 2), Rational(5)}};

}  // namespace

TEST_CASE("exact matrix arithmetic") {
    ExactMatrix m = ExactMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(m * m.inverse() == ExactMatrix::identity(2));
    CHECK(m.pow(3) == m * m * m);
    CHECK(m.pow(0) == ExactMatrix::identity(2));
    CHECK(kron(ExactMatrix::identity(2), ExactMatrix::identity(2)) == ExactMatrix::identity(4));
    ExactMatrix k = kron(m, ExactMatrix::diagonal({Rational(1), Rational(-1)}));
    CHECK(k.dim() == 4);
    CHECK(k(3, 3) == -4);
    CHECK(k(2, 0) == 3);
    CHECK(k(2, 1) == 0);
    CHECK((m - m).is_zero());
    CHECK(ExactMatrix::diagonal({Rational(2), Rational(3)}).is_diagonal());
    CHECK_FALSE(m.is_diagonal());
    CHECK_THROWS(ExactMatrix::from_rows({{1, 2}, {3, 6}}).inverse());
    CHECK_THROWS(m + ExactMatrix::identity(3));
}

TEST_CASE("evaluation module") {
    const Rational t(3, 2), v(2);
    const GeneratorMatrices g = evaluation_rep(v, t);
    CHECK(g.q() == Rational(9, 4));
    CHECK(g.e1 == ExactMatrix::from_rows({{0, 1}, {0, 0}}));
    CHECK(g.f1 == ExactMatrix::from_rows({{0, 0}, {1, 0}}));
    CHECK(g.k1 == ExactMatrix::diagonal({t, 1 / t}));
    CHECK(g.k0 * g.k1 == ExactMatrix::identity(2));
    CHECK(g.e0 == v * g.f1);
    CHECK(check_uq_relations(g));
    CHECK_THROWS_AS(evaluation_rep(0, t), std::domain_error);
    CHECK_THROWS_AS(evaluation_rep(1, 1), std::domain_error);
}

TEST_CASE("tensor products satisfy the quantum affine relations") {
    for (Coproduct cp : {Coproduct::Left, Coproduct::Right})
        for (const auto& sites : kSiteSets) {
            const GeneratorMatrices g = tensor_rep(with_sites(sites), cp);
            CHECK(g.e0.dim() == (1u << sites.size()));
            CHECK(g.k0 * g.k1 == ExactMatrix::identity(g.k0.dim()));
            CHECK(check_uq_relations(g));
        }
    GeneratorMatrices broken = tensor_rep(with_sites({Rational(1), Rational(2)}));
    broken.e1(0, 1) += 1;
    CHECK_FALSE(check_uq_relations(broken));
}

TEST_CASE("coideal generators pass the q-Dolan-Grady gate") {
    for (Coproduct cp : {Coproduct::Left, Coproduct::Right})
        for (const auto& sites : kSiteSets) {
            const CoidealParams params = with_sites(sites);
            const CoidealPair pair = coideal_generators(params, cp);
            const Rational q = params.q();
            CHECK(pair.q == q);
            CHECK(params.rho0() == params.c0 * params.cbar0 * (q + 1 / q) * (q + 1 / q));
            CHECK(params.rho1() == params.c1 * params.cbar1 * (q + 1 / q) * (q + 1 / q));
            CHECK(relations_hold(pair.A, pair.Astar, q, params.rho0(), params.rho1()));
            CHECK(check_qdg(pair.A, pair.Astar, q, params.rho0(), params.rho1()));
            CHECK_FALSE(check_qdg(pair.A, pair.Astar, q, params.rho0() + 1, params.rho1()));
        }
}

TEST_CASE("gate negative controls") {
    const CoidealParams params = with_sites({Rational(1), Rational(2)});
    CoidealPair pair = coideal_generators(params);
    pair.A(0, 1) += Rational(1, 7);
    CHECK_FALSE(check_qdg(pair.A, pair.Astar, params.q(), params.rho0(), params.rho1()));
    CHECK_FALSE(relations_hold(pair.A, pair.Astar, params.q(), params.rho0(), params.rho1()));
    CHECK_THROWS_AS(check_qdg(ExactMatrix::identity(2), ExactMatrix::identity(4), 2, 0, 0), std::invalid_argument);
    const ExactMatrix I = ExactMatrix::identity(4);
    CHECK(check_qdg(I, I, Rational(5, 3), 7, -2));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(with_sites({}).validate(), std::domain_error);
    CHECK_THROWS_AS(with_sites({Rational(0)}).validate(), std::domain_error);
    CHECK_THROWS_AS(with_sites({Rational(2), Rational(2)}).validate(), std::domain_error);
    CoidealParams p;
    p.t = -1;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
}

TEST_CASE("undeformed limit satisfies the q-Serre relations") {
    for (const auto& sites : {kSiteSets[0], kSiteSets[1]}) {
        CoidealParams params = with_sites(sites);
        params.cbar0 = params.cbar1 = params.eps0 = params.eps1 = 0;
        CHECK(params.rho0() == 0);
        CHECK(params.rho1() == 0);
        const CoidealPair pair = coideal_generators(params);
        CHECK(check_qdg(pair.A, pair.Astar, params.q(), 0, 0));
        for (int r = 1; r <= 3; ++r) {
            const NcPoly serre = build_relation_lhs(lusztig_coeffs(r), 1);
            CHECK(eval_ncpoly(serre, pair, params.q(), 0, 0).is_zero());
            CHECK(eval_ncpoly(dagger(serre), pair, params.q(), 0, 0).is_zero());
        }
    }
}

TEST_CASE("higher-order relations vanish on the representations") {
    for (Coproduct cp : {Coproduct::Left, Coproduct::Right})
        for (const auto& sites : kSiteSets) {
            const CoidealParams params = with_sites(sites);
            const CoidealPair pair = coideal_generators(params, cp);
            for (int r = 1; r <= 3; ++r) {
                const CoeffTable t = reduced_genfun_coeffs(r);
                for (int family : {1, 2})
                    CHECK(eval_ncpoly(build_relation_lhs(t, family), pair, params.q(), params.rho0(), params.rho1())
                              .is_zero());
            }
            CoeffTable bad = reduced_genfun_coeffs(2);
            bad.set(0, 1, bad.at(0, 1) + 1);
            CHECK_FALSE(eval_ncpoly(build_relation_lhs(bad, 1), pair, params.q(), params.rho0(), params.rho1())
                            .is_zero());
        }
}

TEST_CASE("eval_ncpoly") {
    const CoidealParams params;
    const CoidealPair pair = coideal_generators(params);
    const Rational q = params.q();
    const NcPoly x = parse_expression("q^2 A A* - rho0 A* + 3");
    const ExactMatrix expect =
        (q * q) * (pair.A * pair.Astar) - params.rho0() * pair.Astar + Rational(3) * ExactMatrix::identity(2);
    CHECK(eval_ncpoly(x, pair, q, params.rho0(), params.rho1()) == expect);
    CHECK(eval_ncpoly(x, pair.A, pair.Astar, q, params.rho0(), params.rho1()) == expect);
    CHECK_THROWS_AS(eval_ncpoly(x, pair, q + 1, params.rho0(), params.rho1()), std::invalid_argument);
}
