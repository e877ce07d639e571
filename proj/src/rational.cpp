#include "qdg/rational.hpp"

#include "cursor.hpp"

#include <stdexcept>

namespace qdg {

Rational parse_rational(std::string_view text) {
    detail::Cursor cur(text);
    cur.skip_ws();
    bool neg = false;
    if (cur.peek() == '-' || cur.peek() == '+') neg = cur.get() == '-';
    BigInt num = cur.big_uint();
    BigInt den = 1;
    if (cur.accept('/')) {
        den = cur.big_uint();
        if (den == 0) throw ParseError("zero denominator", cur.pos());
    }
    cur.skip_ws();
    if (!cur.at_end()) cur.fail("unexpected character in rational");
    Rational x(neg ? BigInt(-num) : num, den);
    x.canonicalize();
    return x;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational pow(const Rational& x, long e) {
    if (e < 0) {
        if (x == 0) throw std::domain_error("zero raised to a negative power");
        return pow(Rational(1) / x, -e);
    }
    Rational result = 1;
    Rational base = x;
    for (unsigned long n = static_cast<unsigned long>(e); n != 0; n >>= 1) {
        if (n & 1) result *= base;
        if (n > 1) base *= base;
    }
    return result;
}

}  // namespace qdg
