#include "qdg/laurent.hpp"

#include "cursor.hpp"
#include "qdg/errors.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <stdexcept>

namespace qdg {

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) terms_.push_back({0, BigInt(constant)});
}

LaurentPoly::LaurentPoly(const BigInt& constant) {
    if (constant != 0) terms_.push_back({0, constant});
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.push_back({exponent, coeff});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exponent == t.exponent) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
    return terms_.front().exponent;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
    return terms_.back().exponent;
}

BigInt LaurentPoly::coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.exponent < e; });
    return (it != terms_.end() && it->exponent == exponent) ? it->coeff : BigInt(0);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

namespace {

// Merge b*sign into a (both sorted, canonical).
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, bool negate) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exponent < a[i].exponent) {
            out.push_back({b[j].exponent, negate ? BigInt(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            BigInt c = negate ? BigInt(a[i].coeff - b[j].coeff) : BigInt(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back({a[i].exponent, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    if (other.terms_.empty()) return *this;
    terms_ = merge(terms_, other.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    if (other.terms_.empty()) return *this;
    terms_ = merge(terms_, other.terms_, true);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    if (a.size() == 1 || b.size() == 1) {
        const LaurentPoly& mono = a.size() == 1 ? a : b;
        const LaurentPoly& other = a.size() == 1 ? b : a;
        const auto& m = mono.terms_.front();
        out.terms_.reserve(other.size());
        for (const auto& t : other.terms_) out.terms_.push_back({t.exponent + m.exponent, t.coeff * m.coeff});
        return out;
    }
    const int lo = a.min_exponent() + b.min_exponent();
    const int hi = a.max_exponent() + b.max_exponent();
    std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            mpz_addmul(acc[static_cast<std::size_t>(x.exponent + y.exponent - lo)].get_mpz_t(),
                       x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (acc[k] != 0) out.terms_.push_back({lo + static_cast<int>(k), std::move(acc[k])});
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::mirrored() const { return scale_exponents(-1); }

LaurentPoly LaurentPoly::scale_exponents(int k) const {
    if (k == 0) throw std::domain_error("scale_exponents by zero");
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.exponent *= k;
    if (k < 0) std::reverse(p.terms_.begin(), p.terms_.end());
    return p;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

Rational LaurentPoly::eval(const Rational& q_val) const {
    if (q_val == 0) throw std::domain_error("Laurent polynomial evaluated at q = 0");
    Rational sum = 0;
    for (const auto& t : terms_) sum += Rational(t.coeff) * pow(q_val, t.exponent);
    return sum;
}

namespace {

// Renders one term without its sign.
std::string render_term(const BigInt& abs_coeff, int exponent, bool latex) {
    std::string qpart;
    if (exponent == 1) {
        qpart = "q";
    } else if (exponent != 0) {
        qpart = latex ? "q^{" + std::to_string(exponent) + "}" : "q^" + std::to_string(exponent);
    }
    if (qpart.empty()) return abs_coeff.get_str();
    if (abs_coeff == 1) return qpart;
    return abs_coeff.get_str() + (latex ? "" : "*") + qpart;
}

std::string render(const std::vector<LaurentPoly::Term>& terms, bool latex) {
    if (terms.empty()) return "0";
    std::string s;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        bool neg = it->coeff < 0;
        if (neg) s += '-';
        else if (it != terms.rbegin()) s += '+';
        s += render_term(abs(it->coeff), it->exponent, latex);
    }
    return s;
}

}  // namespace

std::string LaurentPoly::to_string() const { return render(terms_, false); }
std::string LaurentPoly::to_latex() const { return render(terms_, true); }

std::size_t LaurentPoly::hash() const noexcept {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        h = h * 1000003u ^ std::hash<int>{}(t.exponent);
        h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(t.coeff.get_mpz_t()));
    }
    return h;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    detail::Cursor cur(text);
    std::vector<Term> terms;
    cur.skip_ws();
    bool first = true;
    do {
        cur.skip_ws();
        bool neg = false;
        if (cur.peek() == '+' || cur.peek() == '-') {
            neg = cur.get() == '-';
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;
        cur.skip_ws();
        BigInt c = 1;
        bool has_q = true;
        if (cur.digit_next()) {
            c = cur.big_uint();
            cur.skip_ws();
            has_q = false;
            if (cur.accept('*')) {
                cur.skip_ws();
                if (cur.peek() != 'q') cur.fail("expected 'q'");
                has_q = true;
            }
        }
        int e = 0;
        if (has_q) {
            cur.expect('q');
            e = 1;
            cur.skip_ws();
            if (cur.accept('^')) {
                cur.skip_ws();
                e = static_cast<int>(cur.bounded_int(true, INT_MIN / 4, INT_MAX / 4));
            }
        }
        terms.push_back({e, neg ? BigInt(-c) : c});
        cur.skip_ws();
    } while (!cur.at_end());
    return from_terms(std::move(terms));
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    if (a.is_zero()) return LaurentPoly();
    const int bmin = b.min_exponent(), bmax = b.max_exponent();
    const int amin = a.min_exponent(), amax = a.max_exponent();
    if (amax - amin < bmax - bmin) return std::nullopt;
    const BigInt& lead = b.terms().back().coeff;
    std::vector<BigInt> rem(static_cast<std::size_t>(amax - amin + 1));
    for (const auto& t : a.terms()) rem[static_cast<std::size_t>(t.exponent - amin)] = t.coeff;
    std::vector<LaurentPoly::Term> quot;
    BigInt c;
    for (int e = amax; e >= amin + (bmax - bmin); --e) {
        BigInt& top = rem[static_cast<std::size_t>(e - amin)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        const int shift = e - bmax;
        for (const auto& t : b.terms())
            mpz_submul(rem[static_cast<std::size_t>(t.exponent + shift - amin)].get_mpz_t(),
                       c.get_mpz_t(), t.coeff.get_mpz_t());
        quot.push_back({shift, c});
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    std::reverse(quot.begin(), quot.end());
    return LaurentPoly::from_terms(std::move(quot));
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw IntegrityError("non-exact Laurent division: (" + a.to_string() + ") / (" +
                                 b.to_string() + ")");
    return *std::move(q);
}

LaurentPoly pow(const LaurentPoly& x, unsigned e) {
    LaurentPoly result = 1;
    for (unsigned i = 0; i < e; ++i) result *= x;
    return result;
}

}  // namespace qdg
