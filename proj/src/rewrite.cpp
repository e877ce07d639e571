#include "qdg/rewrite.hpp"

#include "qdg/errors.hpp"
#include "qdg/qnumbers.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace qdg {

namespace {

Word word_of(std::initializer_list<std::pair<Letter, unsigned>> runs) {
    Word w;
    for (auto [l, n] : runs) w = w * Word::power(l, n);
    return w;
}

constexpr Letter kA = Letter::A;
constexpr Letter kS = Letter::Astar;

}  // namespace

const NcPoly& rule_rhs() {
    static const NcPoly rhs = [] {
        RingElement t3(qint(3));
        RingElement r0 = RingElement::rho0();
        NcPoly x = NcPoly(word_of({{kA, 2}, {kS, 1}, {kA, 1}}), t3);
        x -= NcPoly(word_of({{kA, 1}, {kS, 1}, {kA, 2}}), t3);
        x += NcPoly(word_of({{kS, 1}, {kA, 3}}));
        x += NcPoly(word_of({{kA, 1}, {kS, 1}}), r0);
        x -= NcPoly(word_of({{kS, 1}, {kA, 1}}), r0);
        return x;
    }();
    return rhs;
}

NcPoly defining_relation() { return NcPoly(word_of({{kA, 3}, {kS, 1}})) - rule_rhs(); }

std::pair<unsigned, unsigned> reduction_measure(const Word& w) {
    unsigned as = 0, inv = 0;
    for (unsigned i = 0; i < w.length(); ++i) {
        if (w.at(i) == Letter::A) ++as;
        else inv += as;
    }
    return {w.length(), inv};
}

NcPoly apply_rule_at(const NcPoly& x, const Word& word, unsigned position) {
    if (position + 4 > word.length() || word.sub(position, 4) != word_of({{kA, 3}, {kS, 1}}))
        throw std::invalid_argument("rule does not apply at the given position");
    RingElement c = x.coeff(word);
    if (c.is_zero()) throw std::invalid_argument("word not present in polynomial");
    const Word prefix = word.sub(0, position);
    const Word suffix = word.sub(position + 4, word.length() - position - 4);
    const auto m0 = reduction_measure(word);
    NcAccumulator acc;
    acc.add(x);
    acc.add(word, -c);
    for (const auto& [w, k] : rule_rhs().terms()) {
        Word nw = prefix * w * suffix;
        if (!(reduction_measure(nw) < m0))
            throw IntegrityError("termination measure did not decrease on " + word.to_string());
        acc.add(nw, c * k);
    }
    return acc.finish();
}

NcPoly reduce_once(const NcPoly& x, ReductionStep* step) {
    for (const auto& [w, c] : x.terms()) {
        int pos = w.find_reducible();
        if (pos < 0) continue;
        NcPoly out = apply_rule_at(x, w, static_cast<unsigned>(pos));
        if (step) *step = {w, static_cast<unsigned>(pos), out.size()};
        return out;
    }
    return x;
}

bool is_normal_form(const NcPoly& x) {
    for (const auto& t : x.terms())
        if (!t.first.is_reduced()) return false;
    return true;
}

NcPoly normal_form_stepwise(const NcPoly& x, ReductionTrace* trace) {
    NcPoly cur = x;
    while (!is_normal_form(cur)) {
        ReductionStep step;
        cur = reduce_once(cur, &step);
        if (trace) trace->steps.push_back(step);
    }
    if (trace) trace->final = cur;
    return cur;
}

std::string ReductionTrace::to_text() const {
    std::ostringstream os;
    for (const auto& s : steps)
        os << s.word.to_string() << " -> " << s.result_terms << " terms @pos " << s.position << '\n';
    return os.str();
}

const std::vector<AstarTerm>& power_astar_terms(unsigned n) {
    static std::mutex mutex;
    static std::map<unsigned, std::vector<AstarTerm>> memo;  // node-stable references
    std::lock_guard lock(mutex);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    std::vector<AstarTerm> out;
    if (n <= 2) {
        out.push_back({0, LaurentPoly(1), n, 0});
    } else {
        auto eta = EtaTable::shared(static_cast<int>(n));
        const int m = static_cast<int>(n);
        if (m % 2 == 0) {
            const int top = (m - 2) / 2;
            for (int k = 0; k <= top; ++k)
                for (int i = 0; i < 3; ++i) {
                    const LaurentPoly& v = eta->get(m, k, i);
                    if (!v.is_zero())
                        out.push_back({static_cast<unsigned>(top - k), v, static_cast<unsigned>(2 - i),
                                       static_cast<unsigned>(2 * k + i)});
                }
        } else {
            const int top = (m - 3) / 2;
            for (int k = 1; k <= top + 1; ++k)
                for (int i = 0; i < 3; ++i) {
                    const LaurentPoly& v = eta->get(m, k, i);
                    if (!v.is_zero())
                        out.push_back({static_cast<unsigned>(top + 1 - k), v, static_cast<unsigned>(2 - i),
                                       static_cast<unsigned>(2 * k - 1 + i)});
                }
            out.push_back({static_cast<unsigned>(top + 1), LaurentPoly(1), 1, 0});
            out.push_back({static_cast<unsigned>(top + 1), LaurentPoly(-1), 0, 1});
        }
    }
    return memo.emplace(n, std::move(out)).first->second;
}

NcPoly power_astar_expansion(unsigned n) {
    if (n < 1) throw std::domain_error("power_astar_expansion requires n >= 1");
    NcAccumulator acc;
    for (const auto& t : power_astar_terms(n))
        acc.add(Word::power(kA, t.left) * Word::letter(kS) * Word::power(kA, t.right),
                RingElement(RhoMonomial{t.rho_power, 0}, t.coeff));
    return acc.finish();
}

namespace {

// Partially reduced word: `done` is in normal form and ends with A* (or is
// empty), followed by `pending` A's and then the untouched remainder `rest`.
struct State {
    Word done;
    unsigned pending;
    Word rest;
    bool operator==(const State&) const = default;
};

struct StateHash {
    std::size_t operator()(const State& s) const noexcept {
        WordHash h;
        return h(s.done) * 31 + h(s.rest) * 1000003u + s.pending;
    }
};

}  // namespace

NcPoly normal_form(const NcPoly& x, NormalFormStats* stats) {
    std::unordered_map<State, RingElement, StateHash> frontier;
    for (const auto& [w, c] : x.terms()) frontier.emplace(State{Word(), 0, w}, c);
    NcAccumulator result;
    std::size_t peak = frontier.size(), rounds = 0;
    while (!frontier.empty()) {
        std::unordered_map<State, RingElement, StateHash> next;
        for (auto& [s, c] : frontier) {
            // Leading A's of the remainder join the pending block.
            unsigned lead = 0;
            while (lead < s.rest.length() && s.rest.at(lead) == Letter::A) ++lead;
            if (lead == s.rest.length()) {
                result.add(s.done * Word::power(kA, s.pending + lead), c);
                continue;
            }
            const unsigned n = s.pending + lead;
            const Word tail = s.rest.sub(lead + 1, s.rest.length() - lead - 1);
            for (const auto& t : power_astar_terms(n)) {
                State ns{s.done * Word::power(kA, t.left) * Word::letter(kS), t.right, tail};
                RingElement nc = c.scaled(t.coeff, t.rho_power);
                auto [it, inserted] = next.try_emplace(ns, std::move(nc));
                if (!inserted) {
                    it->second += nc;
                }
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        frontier = std::move(next);
        peak = std::max(peak, frontier.size());
        if (!frontier.empty()) ++rounds;
    }
    if (stats) {
        stats->peak_term_count = peak;
        stats->rounds = rounds;
    }
    return result.finish();
}

}  // namespace qdg
