#pragma once

#include "qdg/coefficients.hpp"
#include "qdg/ncpoly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qdg {

/// Family 1: sum_{p,j} (-1)^{j+p} rho0^p c_j^{[r,p]} A^{2r+1-2p-j} (A*)^r A^j.
/// Family 2: dagger of family 1. Throws std::invalid_argument on an
/// incomplete table or a family other than 1 or 2.
NcPoly build_relation_lhs(const CoeffTable& table, int family = 1);

struct VerificationReport {
    int r = 0;
    int family = 1;
    bool zero = false;  ///< result: zero <=> residual_term_count == 0
    std::size_t residual_term_count = 0;
    std::size_t peak_term_count = 0;
    double elapsed_ms = 0;
    Route route = Route::Genfun;
    NcPoly residual;
    /// Family two is obtained from the family-one reduction through dagger.
    bool via_dagger = false;
};

/// Reduces the family-one relation built from `table`; family 2 is reported
/// as the dagger image of the family-one result.
VerificationReport verify_relation(const CoeffTable& table, int family = 1);
VerificationReport verify_relation(int r, Route route = Route::Genfun, int family = 1);

struct RouteMismatch {
    int r = 0;
    int p = 0;
    int j = 0;
    Route first;
    Route second;
    LaurentPoly first_value;
    LaurentPoly second_value;
};

struct CrossCheckReport {
    int r_max = 0;
    std::vector<Route> routes;
    std::optional<RouteMismatch> first_mismatch;  ///< scan order r, p, j ascending
    bool agree() const noexcept { return !first_mismatch.has_value(); }
};

/// Compares genfun, recursion and closed (and closed-literal if requested)
/// entrywise for r = 1..r_max against the genfun table.
CrossCheckReport cross_check_routes(int r_max, bool include_literal = false);

}  // namespace qdg
