#include "qdg/ncpoly.hpp"

#include <algorithm>

namespace qdg {

namespace {

bool term_less(const NcPoly::Term& a, const NcPoly::Term& b) {
    return CanonicalOrder{}(a.first, b.first);
}

}  // namespace

NcPoly::NcPoly(const RingElement& scalar) {
    if (!scalar.is_zero()) terms_.emplace_back(Word(), scalar);
}

NcPoly::NcPoly(const Word& w, RingElement coeff) {
    if (!coeff.is_zero()) terms_.emplace_back(w, std::move(coeff));
}

NcPoly NcPoly::from_terms(std::vector<Term> terms) {
    NcAccumulator acc;
    for (auto& [w, c] : terms) acc.add(w, c);
    return acc.finish();
}

RingElement NcPoly::coeff(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{w, RingElement()}, term_less);
    return (it != terms_.end() && it->first == w) ? it->second : RingElement();
}

NcPoly NcPoly::operator-() const {
    NcPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

namespace {

std::vector<NcPoly::Term> merge(const std::vector<NcPoly::Term>& a,
                                const std::vector<NcPoly::Term>& b, bool negate) {
    std::vector<NcPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    CanonicalOrder less;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && less(a[i].first, b[j].first))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || less(b[j].first, a[i].first)) {
            out.emplace_back(b[j].first, negate ? -b[j].second : b[j].second);
            ++j;
        } else {
            RingElement c = negate ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

NcPoly& NcPoly::operator+=(const NcPoly& other) {
    terms_ = merge(terms_, other.terms_, false);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) {
    terms_ = merge(terms_, other.terms_, true);
    return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcAccumulator acc;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) acc.add(wa * wb, ca * cb);
    return acc.finish();
}

NcPoly operator*(const RingElement& c, const NcPoly& x) {
    NcPoly out;
    if (c.is_zero()) return out;
    for (const auto& [w, k] : x.terms_) {
        RingElement p = c * k;
        if (!p.is_zero()) out.terms_.emplace_back(w, std::move(p));
    }
    return out;
}

NcPoly ncpoly_mul(const NcPoly& a, const NcPoly& b) { return a * b; }

NcPoly dagger(const NcPoly& x) {
    std::vector<NcPoly::Term> terms;
    terms.reserve(x.size());
    for (const auto& [w, c] : x.terms()) terms.emplace_back(w.swapped(), c.swap_rhos());
    std::sort(terms.begin(), terms.end(), term_less);  // swapping keeps words distinct
    NcPoly out;
    out.terms_ = std::move(terms);
    return out;
}

namespace {

// A coefficient prints bare when it is a single monomial with coefficient
// +-1 times a power of q and/or rhos; otherwise it is parenthesized.
std::pair<bool, std::string> coefficient_text(const RingElement& c) {
    if (c.size() == 1 && c.terms().front().second.size() == 1) {
        std::string s = c.to_string();
        bool neg = s.front() == '-';
        if (neg) s.erase(0, 1);
        return {neg, s};
    }
    std::string s = c.to_string();
    if (s.front() == '-') return {true, "(" + (-c).to_string() + ")"};
    return {false, "(" + s + ")"};
}

}  // namespace

std::string NcPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        auto [neg, text] = coefficient_text(c);
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        if (w.empty()) {
            s += text;
        } else {
            if (text != "1") s += text + " ";
            s += w.to_string();
        }
    }
    return s;
}

void NcAccumulator::add(const Word& w, const RingElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) map_.erase(it);
    }
}

void NcAccumulator::add(const NcPoly& x) {
    for (const auto& [w, c] : x.terms()) add(w, c);
}

NcPoly NcAccumulator::finish() {
    std::vector<NcPoly::Term> terms;
    terms.reserve(map_.size());
    for (auto& [w, c] : map_) terms.emplace_back(w, std::move(c));
    map_.clear();
    std::sort(terms.begin(), terms.end(), term_less);
    NcPoly out;
    out.terms_ = std::move(terms);
    return out;
}

}  // namespace qdg
