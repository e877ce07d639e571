#include "qdg/coefficients.hpp"

#include "qdg/errors.hpp"

#include <stdexcept>
#include <string>

namespace qdg {

std::string to_string(Route route) {
    switch (route) {
        case Route::Genfun: return "genfun";
        case Route::Closed: return "closed";
        case Route::ClosedLiteral: return "closed-literal";
        case Route::Recursion: return "recursion";
        case Route::Lusztig: return "lusztig";
    }
    return "?";
}

std::optional<Route> parse_route(std::string_view name) {
    for (Route r : {Route::Genfun, Route::Closed, Route::ClosedLiteral, Route::Recursion, Route::Lusztig})
        if (to_string(r) == name) return r;
    return std::nullopt;
}

// ---------------------------------------------------------------- CoeffTable

CoeffTable::CoeffTable(int r, Route route) : r_(r), route_(route) {
    if (r < 1) throw std::domain_error("coefficient table requires r >= 1");
    for (int p = 0; p <= r; ++p) rows_.emplace_back(static_cast<std::size_t>(j_max(p) + 1));
}

bool CoeffTable::in_range(int p, int j) const noexcept {
    return p >= 0 && p <= r_ && j >= 0 && j <= j_max(p);
}

void CoeffTable::check(int p, int j) const {
    if (!in_range(p, j))
        throw IntegrityError("coefficient index out of range: r=" + std::to_string(r_) +
                             " p=" + std::to_string(p) + " j=" + std::to_string(j));
}

bool CoeffTable::has(int p, int j) const {
    return in_range(p, j) && rows_[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)].has_value();
}

const LaurentPoly& CoeffTable::at(int p, int j) const {
    check(p, j);
    const auto& slot = rows_[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
    if (!slot)
        throw IntegrityError("coefficient not set: r=" + std::to_string(r_) + " p=" +
                             std::to_string(p) + " j=" + std::to_string(j));
    return *slot;
}

void CoeffTable::set(int p, int j, LaurentPoly value) {
    check(p, j);
    rows_[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] = std::move(value);
}

bool CoeffTable::is_complete() const {
    for (const auto& row : rows_)
        for (const auto& slot : row)
            if (!slot) return false;
    return true;
}

bool CoeffTable::is_symmetric() const {
    for (int p = 0; p <= r_; ++p)
        for (int j = 0; j <= j_max(p); ++j)
            if (!has(p, j) || !has(p, j_max(p) - j) || at(p, j) != at(p, j_max(p) - j)) return false;
    return true;
}

bool CoeffTable::same_entries(const CoeffTable& other) const {
    return r_ == other.r_ && rows_ == other.rows_;
}

// ------------------------------------------------------ generating polynomial

CoeffTable reduced_genfun_coeffs(int r) {
    auto general = genfun_coeffs<RingElement>(r, reduced_parameters(r));
    CoeffTable table(r, Route::Genfun);
    for (const auto& [ij, a] : general.entries) {
        const auto [i, j] = ij;
        const int rest = 2 * r + 1 - i - j;
        if (rest < 0 || rest % 2 != 0 || a.size() != 1)
            throw IntegrityError("generating polynomial has an unexpected monomial");
        const int p = rest / 2;
        const auto& [mono, laurent] = a.terms().front();
        if (mono != RhoMonomial{static_cast<unsigned>(p), 0})
            throw IntegrityError("generating polynomial has an unexpected rho power");
        table.set(p, j, (j + p) % 2 == 0 ? laurent : -laurent);
    }
    for (int p = 0; p <= r; ++p)
        for (int j = 0; j <= table.j_max(p); ++j)
            if (!table.has(p, j)) table.set(p, j, LaurentPoly());
    if (!table.is_symmetric()) throw IntegrityError("generating-polynomial table is not symmetric");
    if (table.at(0, 0) != LaurentPoly(1)) throw IntegrityError("normalization c_0^{[r,0]} != 1");
    return table;
}

// ---------------------------------------------------------------- closed form

namespace {

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace

LaurentPoly closedform_coeff(int r, int p, int j, bool literal) {
    if (r < 1 || p < 0 || p > r || j < 0 || j > 2 * (r - p) + 1)
        throw std::out_of_range("closed form index out of range");
    if (j > r - p) j = 2 * (r - p) + 1 - j;
    // dp[a][b]: sum over disjoint S1 (|S1| = a), S2 (|S2| = b) within {1..s}
    // of prod_{S1} [s]^2_{q^2} prod_{S2} [2s]_{q^2}/[s]_{q^2}.
    std::vector<std::vector<LaurentPoly>> dp(static_cast<std::size_t>(p + 1),
                                             std::vector<LaurentPoly>(static_cast<std::size_t>(j + 1)));
    dp[0][0] = 1;
    for (int s = 1; s <= r; ++s) {
        const LaurentPoly sq = qint_base(s, 2) * qint_base(s, 2);
        const LaurentPoly beta = divide_exact(qint_base(2 * s, 2), qint_base(s, 2));
        for (int a = p; a >= 0; --a)
            for (int b = j; b >= 0; --b) {
                if (a > 0 && !dp[a - 1][b].is_zero()) dp[a][b] += dp[a - 1][b] * sq;
                if (b > 0 && !dp[a][b - 1].is_zero()) dp[a][b] += dp[a][b - 1] * beta;
            }
    }
    LaurentPoly out;
    for (int k = 0; k <= j; ++k) {
        const LaurentPoly& sum = dp[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)];
        if (sum.is_zero()) continue;
        const long top = literal ? r - p : r - p - k;
        BigInt weight = binomial(top, (j - k) / 2);
        if (weight != 0) out += sum * LaurentPoly(weight);
    }
    return out;
}

CoeffTable closedform_coeffs(int r, bool literal) {
    CoeffTable table(r, literal ? Route::ClosedLiteral : Route::Closed);
    for (int p = 0; p <= r; ++p)
        for (int j = 0; j <= table.j_max(p); ++j) table.set(p, j, closedform_coeff(r, p, j, literal));
    return table;
}

// ------------------------------------------------------------------- Lusztig

CoeffTable lusztig_coeffs(int r) {
    CoeffTable table(r, Route::Lusztig);
    for (int p = 0; p <= r; ++p)
        for (int j = 0; j <= table.j_max(p); ++j)
            table.set(p, j, p == 0 ? qbinomial(2 * r + 1, j) : LaurentPoly());
    return table;
}

bool qbinomial_theorem_check(int r, const std::function<void(std::vector<LaurentPoly>&)>& tamper) {
    if (r < 1) throw std::domain_error("qbinomial_theorem_check requires r >= 1");
    const int n = 2 * r + 1;
    std::vector<LaurentPoly> lhs{LaurentPoly(1)};  // coefficients of u^k
    for (int m = 0; m < n; ++m) {
        std::vector<LaurentPoly> next(lhs.size() + 1);
        const LaurentPoly factor = -LaurentPoly::monomial(2 * m);
        for (std::size_t k = 0; k < lhs.size(); ++k) {
            next[k] += lhs[k];
            next[k + 1] += lhs[k] * factor;
        }
        lhs = std::move(next);
    }
    std::vector<LaurentPoly> rhs;
    for (int j = 0; j <= n; ++j) {
        LaurentPoly term = qbinomial(n, j) * LaurentPoly::monomial(2 * j * r);
        rhs.push_back(j % 2 == 0 ? term : -term);
    }
    if (tamper) tamper(rhs);
    return lhs == rhs;
}

CoeffTable coefficients_for(Route route, int r) {
    switch (route) {
        case Route::Genfun: return reduced_genfun_coeffs(r);
        case Route::Closed: return closedform_coeffs(r, false);
        case Route::ClosedLiteral: return closedform_coeffs(r, true);
        case Route::Recursion: return recursion_coeffs(r).back();
        case Route::Lusztig: return lusztig_coeffs(r);
    }
    throw std::invalid_argument("unknown route");
}

}  // namespace qdg
