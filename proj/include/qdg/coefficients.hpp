#pragma once

#include "qdg/laurent.hpp"
#include "qdg/qnumbers.hpp"
#include "qdg/ring_element.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdg {

enum class Route { Genfun, Closed, ClosedLiteral, Recursion, Lusztig };

std::string to_string(Route route);
/// Accepts genfun | closed | closed-literal | recursion | lusztig.
std::optional<Route> parse_route(std::string_view name);

/// Triangular table c_j^{[r,p]}, 0 <= p <= r, 0 <= j <= 2(r-p)+1.
class CoeffTable {
public:
    CoeffTable(int r, Route route);

    int r() const noexcept { return r_; }
    Route route() const noexcept { return route_; }
    void set_route(Route route) noexcept { route_ = route; }
    /// Largest j in row p: 2(r-p)+1.
    int j_max(int p) const noexcept { return 2 * (r_ - p) + 1; }
    bool in_range(int p, int j) const noexcept;

    /// Throws IntegrityError when (p, j) is out of range or unset.
    const LaurentPoly& at(int p, int j) const;
    bool has(int p, int j) const;
    void set(int p, int j, LaurentPoly value);

    bool is_complete() const;
    /// c_j = c_{j_max(p) - j} on every row (complete tables only).
    bool is_symmetric() const;
    /// Entries equal, ignoring the route tag.
    bool same_entries(const CoeffTable& other) const;

private:
    int r_;
    Route route_;
    std::vector<std::vector<std::optional<LaurentPoly>>> rows_;
    void check(int p, int j) const;
};

/// Polynomial in commuting x, y with scalar coefficients: (i, j) -> a_ij.
template <class Scalar>
using BivariatePoly = std::map<std::pair<int, int>, Scalar>;

/// Coefficients a_ij of p_r(x, y) = (x - y) prod_s (x^2 - beta_s x y + y^2
/// - gamma_s (x + y) - delta_s) for the given parameter sequence.
template <class Scalar>
struct GeneralCoeffTable {
    int r = 0;
    std::vector<TridiagonalParams<Scalar>> params;
    BivariatePoly<Scalar> entries;  ///< only nonzero a_ij, all with i + j <= 2r + 1

    Scalar at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? Scalar{} : it->second;
    }
};

template <class Scalar>
GeneralCoeffTable<Scalar> genfun_coeffs(int r, const std::vector<TridiagonalParams<Scalar>>& params) {
    if (r < 1 || static_cast<int>(params.size()) != r)
        throw std::invalid_argument("genfun_coeffs: need exactly r parameter triples");
    BivariatePoly<Scalar> poly{{{1, 0}, Scalar(1)}, {{0, 1}, Scalar(-1)}};
    for (const auto& prm : params) {
        const std::vector<std::pair<std::pair<int, int>, Scalar>> factor{
            {{2, 0}, Scalar(1)},          {{1, 1}, Scalar(0) - prm.beta}, {{0, 2}, Scalar(1)},
            {{1, 0}, Scalar(0) - prm.gamma}, {{0, 1}, Scalar(0) - prm.gamma}, {{0, 0}, Scalar(0) - prm.delta}};
        BivariatePoly<Scalar> next;
        for (const auto& [ij, a] : poly)
            for (const auto& [kl, b] : factor) {
                Scalar prod = a * b;
                if (prod == Scalar{}) continue;
                auto& slot = next[{ij.first + kl.first, ij.second + kl.second}];
                slot = slot + prod;
            }
        std::erase_if(next, [](const auto& kv) { return kv.second == Scalar{}; });
        poly = std::move(next);
    }
    return {r, params, std::move(poly)};
}

/// Table from the generating polynomial with beta_s = [2s]_{q^2}/[s]_{q^2},
/// gamma_s = 0, delta_s = rho0 [s]^2_{q^2}, using
/// a_{2r+1-2p-j, j} = (-1)^{j+p} rho0^p c_j^{[r,p]}. Asserts symmetry.
CoeffTable reduced_genfun_coeffs(int r);

/// Closed-form double sum. Requires 0 <= p <= r and 0 <= j <= 2(r-p)+1
/// (j > r-p is evaluated through the symmetry c_j = c_{2(r-p)+1-j}).
/// literal = true uses the binomial factor C(r-p, floor((j-k)/2)); the
/// default uses C(r-p-k, floor((j-k)/2)).
LaurentPoly closedform_coeff(int r, int p, int j, bool literal = false);
CoeffTable closedform_coeffs(int r, bool literal = false);

/// Auxiliary arrays M^{(r,p)}_j, N^{(r,p)}_j of one recursion level, with
/// index ranges guarded (IntegrityError outside them).
class RecursionTables {
public:
    explicit RecursionTables(const CoeffTable& level);

    int r() const noexcept { return r_; }
    const LaurentPoly& M(int p, int j) const;
    const LaurentPoly& N(int p, int j) const;
    bool has_M(int p, int j) const { return m_.count({p, j}) != 0; }
    bool has_N(int p, int j) const { return n_.count({p, j}) != 0; }
    const std::map<std::pair<int, int>, LaurentPoly>& M_entries() const noexcept { return m_; }
    const std::map<std::pair<int, int>, LaurentPoly>& N_entries() const noexcept { return n_; }

private:
    int r_;
    std::map<std::pair<int, int>, LaurentPoly> m_;
    std::map<std::pair<int, int>, LaurentPoly> n_;
};

/// One inductive step r -> r+1. Every division is exact or IntegrityError.
CoeffTable recursion_step(const CoeffTable& level);
/// Tables for r = 1..r_max, seeded with the defining relation at r = 1.
std::vector<CoeffTable> recursion_coeffs(int r_max);

/// p = 0 row [2r+1 choose j]_q, every other row zero.
CoeffTable lusztig_coeffs(int r);

/// Checks prod_{m=0}^{2r} (1 - q^{2m} u) = sum_j [2r+1 choose j]_q (-1)^j q^{2jr} u^j
/// coefficientwise in u. `tamper` may modify the right-hand side
/// coefficients before comparison (negative controls).
bool qbinomial_theorem_check(int r, const std::function<void(std::vector<LaurentPoly>&)>& tamper = {});

/// Table for `route` at r.
CoeffTable coefficients_for(Route route, int r);

}  // namespace qdg
