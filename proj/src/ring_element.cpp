#include "qdg/ring_element.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdg {

RingElement::RingElement(long constant) : RingElement(LaurentPoly(constant)) {}

RingElement::RingElement(const LaurentPoly& laurent) {
    if (!laurent.is_zero()) terms_.emplace_back(RhoMonomial{}, laurent);
}

RingElement::RingElement(RhoMonomial mono, LaurentPoly coeff) {
    if (!coeff.is_zero()) terms_.emplace_back(mono, std::move(coeff));
}

RingElement RingElement::rho0(unsigned power) { return {RhoMonomial{power, 0}, LaurentPoly(1)}; }
RingElement RingElement::rho1(unsigned power) { return {RhoMonomial{0, power}, LaurentPoly(1)}; }

LaurentPoly RingElement::coeff(RhoMonomial mono) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                               [](const Term& t, const RhoMonomial& m) { return t.first < m; });
    return (it != terms_.end() && it->first == mono) ? it->second : LaurentPoly();
}

bool RingElement::is_rho_free() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == RhoMonomial{});
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

void RingElement::add_term(const RhoMonomial& mono, const LaurentPoly& c, bool negate) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                               [](const Term& t, const RhoMonomial& m) { return t.first < m; });
    if (it != terms_.end() && it->first == mono) {
        if (negate) it->second -= c;
        else it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.emplace(it, mono, negate ? -c : c);
    }
}

RingElement& RingElement::operator+=(const RingElement& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c, false);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c, true);
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    RingElement out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(RhoMonomial{ma.rho0 + mb.rho0, ma.rho1 + mb.rho1}, ca * cb, false);
    return out;
}

RingElement RingElement::scaled(const LaurentPoly& c, unsigned rho0_power) const {
    RingElement out;
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [m, x] : terms_)
        out.terms_.emplace_back(RhoMonomial{m.rho0 + rho0_power, m.rho1}, x * c);
    return out;  // shifting rho0 uniformly keeps the order
}

RingElement RingElement::swap_rhos() const {
    RingElement out;
    out.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.terms_.emplace_back(RhoMonomial{m.rho1, m.rho0}, c);
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    return out;
}

LaurentPoly RingElement::specialize_rho_zero() const { return coeff(RhoMonomial{}); }

Rational RingElement::eval(const Rational& q_val, const Rational& rho0_val,
                           const Rational& rho1_val) const {
    if (q_val == 0) throw std::domain_error("ring element evaluated at q = 0");
    Rational sum = 0;
    for (const auto& [m, c] : terms_)
        sum += c.eval(q_val) * pow(rho0_val, m.rho0) * pow(rho1_val, m.rho1);
    return sum;
}

namespace {

std::string rho_part(const RhoMonomial& m) {
    std::string s;
    auto add = [&s](const char* name, unsigned k) {
        if (k == 0) return;
        if (!s.empty()) s += '*';
        s += name;
        if (k > 1) s += "^" + std::to_string(k);
    };
    add("rho0", m.rho0);
    add("rho1", m.rho1);
    return s;
}

}  // namespace

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Highest rho degree first reads naturally; constant part last.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string rho = rho_part(m);
        std::string piece;
        bool neg = false;
        if (rho.empty()) {
            piece = c.to_string();
            neg = piece.front() == '-';
            if (neg) piece.erase(0, 1);
        } else if (c.size() == 1 && c.terms().front().exponent == 0) {
            const BigInt& k = c.terms().front().coeff;
            neg = k < 0;
            piece = abs(k) == 1 ? rho : BigInt(abs(k)).get_str() + "*" + rho;
        } else if (c.size() == 1) {
            std::string lp = c.to_string();
            neg = lp.front() == '-';
            if (neg) lp.erase(0, 1);
            piece = lp + "*" + rho;
        } else {
            piece = "(" + c.to_string() + ")*" + rho;
        }
        if (neg) s += '-';
        else if (!s.empty()) s += '+';
        s += piece;
    }
    return s;
}

std::size_t RingElement::hash() const noexcept {
    std::size_t h = terms_.size();
    for (const auto& [m, c] : terms_) h = (h * 31 + m.rho0 * 7 + m.rho1) * 1000003u ^ c.hash();
    return h;
}

}  // namespace qdg
