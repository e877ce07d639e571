#include "qdg/errors.hpp"
#include "qdg/ncpoly.hpp"
#include "qdg/qnumbers.hpp"
#include "qdg/rewrite.hpp"

#include <doctest.h>

#include <random>

using namespace qdg;

namespace {

Word W(const char* s) {
    Word w;
    for (; *s; ++s) w = w * Word::letter(*s == 'a' ? Letter::A : Letter::Astar);
    return w;
}

NcPoly random_poly(std::mt19937_64& rng, unsigned max_len = 5) {
    std::uniform_int_distribution<unsigned> len(0, max_len), terms(1, 4);
    std::uniform_int_distribution<int> coef(-3, 3), e(-2, 2), rho(0, 1);
    NcAccumulator acc;
    for (unsigned t = terms(rng); t > 0; --t) {
        unsigned n = len(rng);
        Word w = Word::from_bits(rng(), n);
        RingElement c(RhoMonomial{static_cast<unsigned>(rho(rng)), static_cast<unsigned>(rho(rng))},
                      LaurentPoly::monomial(e(rng), coef(rng)) + LaurentPoly(coef(rng)));
        acc.add(w, c);
    }
    return acc.finish();
}

}  // namespace

TEST_CASE("word basics") {
    Word w = W("aaab");
    CHECK(w.length() == 4);
    CHECK(w.to_string() == "A^3 A*");
    CHECK(Word().to_string() == "1");
    CHECK(W("bba").to_string() == "A*^2 A");
    CHECK(w.swapped() == W("bbba"));
    CHECK(w.count(Letter::A) == 3);
    CHECK(W("ab") * W("ba") == W("abba"));
    CHECK((W("a") * W("b")) * W("a") == W("a") * (W("b") * W("a")));
    CHECK(W("abaaab").find_reducible() == 2);
    CHECK(W("aaba").find_reducible() == -1);
    CHECK(W("ab").sub(1, 1) == W("b"));
    CHECK_THROWS_AS(Word::power(Letter::A, 40) * Word::power(Letter::A, 30), std::length_error);
}

TEST_CASE("canonical order: degree descending then A < A*") {
    CanonicalOrder less;
    CHECK(less(W("aaa"), W("ab")));
    CHECK(less(W("ab"), W("ba")));
    CHECK(less(W("aab"), W("aba")));
    CHECK_FALSE(less(W("ab"), W("ab")));
}

TEST_CASE("ncpoly_mul examples") {
    const NcPoly A = NcPoly::A(), S = NcPoly::Astar();
    NcPoly p = A * S;
    CHECK(p.size() == 1);
    CHECK(p.coeff(W("ab")) == RingElement(1));
    NcPoly prod = (A - S) * (A + S);
    CHECK(prod == NcPoly(W("aa")) + NcPoly(W("ab")) - NcPoly(W("ba")) - NcPoly(W("bb")));
    NcPoly a3 = A * A * A;
    CHECK(a3 * S == NcPoly(W("aaab")));
}

TEST_CASE("free algebra axioms on random inputs") {
    std::mt19937_64 rng(41);
    const NcPoly one(RingElement(1));
    for (int i = 0; i < 60; ++i) {
        NcPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(one * a == a);
        CHECK(a * one == a);
        CHECK(a - a == NcPoly());
    }
}

TEST_CASE("dagger") {
    CHECK(dagger(NcPoly(W("ab"))) == NcPoly(W("ba")));
    CHECK(dagger(NcPoly(W("a"), RingElement::rho0())) == NcPoly(W("b"), RingElement::rho1()));
    std::mt19937_64 rng(43);
    for (int i = 0; i < 60; ++i) {
        NcPoly a = random_poly(rng), b = random_poly(rng);
        CHECK(dagger(dagger(a)) == a);
        CHECK(dagger(a * b) == dagger(a) * dagger(b));
        CHECK(dagger(a + b) == dagger(a) + dagger(b));
    }
    // Family-one defining relation maps to the family-two relation.
    NcPoly rel = defining_relation();
    const RingElement t3(qint(3));
    NcPoly second = NcPoly(W("bbba")) - NcPoly(W("bbab"), t3) + NcPoly(W("babb"), t3) - NcPoly(W("abbb")) -
                    NcPoly(W("ba"), RingElement::rho1()) + NcPoly(W("ab"), RingElement::rho1());
    CHECK(dagger(rel) == second);
}

TEST_CASE("parse_expression examples") {
    CHECK(parse_expression("A^3 A*") == NcPoly(W("aaab")));
    NcPoly two = parse_expression("q^2 A A* - rho0 A");
    CHECK(two.size() == 2);
    CHECK(two.coeff(W("ab")) == RingElement(LaurentPoly::monomial(2)));
    CHECK(two.coeff(W("a")) == -RingElement::rho0());
    CHECK(parse_expression("[3]_q A^2 A* A") == NcPoly(W("aaba"), RingElement(qint(3))));
    CHECK(parse_expression("A*A") == NcPoly(W("ba")));
    CHECK(parse_expression("2*A") == NcPoly(W("a"), RingElement(2)));
    CHECK(parse_expression("rho0*A*") == NcPoly(W("b"), RingElement::rho0()));
    CHECK(parse_expression("(q + q^-1)^2 A*^2") ==
          NcPoly(W("bb"), RingElement(LaurentPoly::parse("q^2+2+q^-2"))));
    CHECK(parse_expression("3 - 3") == NcPoly());
    CHECK(parse_expression("A^0") == NcPoly(RingElement(1)));
}

TEST_CASE("parse_expression errors") {
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("A +"), ParseError);
    CHECK_THROWS_AS(parse_expression("B"), ParseError);
    CHECK_THROWS_AS(parse_expression("(A)"), ParseError);
    CHECK_THROWS_AS(parse_expression("A^65"), ParseError);
    CHECK_THROWS_AS(parse_expression("A^40 A^40"), ParseError);
    CHECK_THROWS_AS(parse_expression("q^99999999999999"), ParseError);
    try {
        parse_expression("A A* $");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("pretty-print / parse round trip") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 200; ++i) {
        NcPoly a = random_poly(rng, 8);
        CHECK(parse_expression(a.to_string()) == a);
    }
    NcPoly r = rule_rhs();
    CHECK(parse_expression(r.to_string()) == r);
    CHECK(NcPoly().to_string() == "0");
}
