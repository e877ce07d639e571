#include "cursor.hpp"
#include "qdg/ncpoly.hpp"
#include "qdg/qnumbers.hpp"

#include <stdexcept>

namespace qdg {

namespace {

constexpr long kMaxQExponent = 1'000'000;
constexpr long kMaxRhoExponent = 10'000;

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : cur_(text) {}

    NcPoly parse_all() {
        NcPoly x = sum(/*allow_words=*/true);
        cur_.skip_ws();
        if (!cur_.at_end()) cur_.fail("unexpected character '" + std::string(1, cur_.peek()) + "'");
        return x;
    }

private:
    detail::Cursor cur_;

    NcPoly sum(bool allow_words) {
        cur_.skip_ws();
        bool neg = false;
        if (cur_.peek() == '+' || cur_.peek() == '-') neg = cur_.get() == '-';
        NcPoly total = term(allow_words);
        if (neg) total = -total;
        for (;;) {
            cur_.skip_ws();
            char c = cur_.peek();
            if (c != '+' && c != '-') break;
            cur_.get();
            NcPoly t = term(allow_words);
            if (c == '+') total += t;
            else total -= t;
        }
        return total;
    }

    NcPoly term(bool allow_words) {
        RingElement coeff = 1;
        Word word;
        bool any = false;
        for (;;) {
            cur_.skip_ws();
            if (any && cur_.accept('*')) cur_.skip_ws();
            char c = cur_.peek();
            if (c == 'A') {
                if (!allow_words) cur_.fail("generator inside a coefficient");
                std::size_t at = cur_.pos();
                cur_.get();
                Letter l = cur_.accept('*') ? Letter::Astar : Letter::A;
                unsigned n = static_cast<unsigned>(exponent(0, Word::kMaxLength));
                if (word.length() + n > Word::kMaxLength) throw ParseError("exponent overflow", at);
                word = word * Word::power(l, n);
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= RingElement(LaurentPoly(cur_.big_uint()));
            } else if (c == 'q') {
                cur_.get();
                coeff *= RingElement(LaurentPoly::monomial(static_cast<int>(signed_exponent())));
            } else if (cur_.accept("rho0")) {
                coeff *= RingElement::rho0(static_cast<unsigned>(exponent(0, kMaxRhoExponent)));
            } else if (cur_.accept("rho1")) {
                coeff *= RingElement::rho1(static_cast<unsigned>(exponent(0, kMaxRhoExponent)));
            } else if (c == '[') {
                cur_.get();
                cur_.skip_ws();
                long n = cur_.bounded_int(false, 0, 100'000);
                cur_.skip_ws();
                cur_.expect(']');
                if (!cur_.accept("_q")) cur_.fail("expected '_q'");
                coeff *= RingElement(qint(static_cast<int>(n)));
            } else if (c == '(') {
                cur_.get();
                NcPoly inner = sum(/*allow_words=*/false);
                cur_.skip_ws();
                cur_.expect(')');
                RingElement s = inner.coeff(Word());
                unsigned n = static_cast<unsigned>(exponent(0, kMaxRhoExponent));
                RingElement p = 1;
                for (unsigned i = 0; i < n; ++i) p *= s;
                coeff *= p;
            } else {
                if (!any) cur_.fail("expected a term");
                break;
            }
            any = true;
        }
        return NcPoly(word, coeff);
    }

    // Optional "^ uint" with default 1, bounded above.
    long exponent(long lo, long hi) {
        std::size_t save = cur_.pos();
        cur_.skip_ws();
        if (!cur_.accept('^')) {
            restore(save);
            return 1;
        }
        cur_.skip_ws();
        return cur_.bounded_int(false, lo, hi);
    }

    long signed_exponent() {
        std::size_t save = cur_.pos();
        cur_.skip_ws();
        if (!cur_.accept('^')) {
            restore(save);
            return 1;
        }
        cur_.skip_ws();
        return cur_.bounded_int(true, -kMaxQExponent, kMaxQExponent);
    }

    void restore(std::size_t pos) { cur_.seek(pos); }
};

}  // namespace

NcPoly parse_expression(std::string_view text) { return ExpressionParser(text).parse_all(); }

RingElement parse_scalar(std::string_view text) {
    NcPoly x = ExpressionParser(text).parse_all();
    for (const auto& [w, c] : x.terms())
        if (!w.empty()) throw ParseError("generator inside a scalar expression", 0);
    return x.coeff(Word());
}

}  // namespace qdg
