#include "qdg/verify.hpp"

#include "qdg/rewrite.hpp"

#include <chrono>
#include <stdexcept>

namespace qdg {

NcPoly build_relation_lhs(const CoeffTable& table, int family) {
    if (family != 1 && family != 2) throw std::invalid_argument("relation family must be 1 or 2");
    if (!table.is_complete()) throw std::invalid_argument("coefficient table is incomplete");
    const int r = table.r();
    const Word middle = Word::power(Letter::Astar, static_cast<unsigned>(r));
    NcAccumulator acc;
    for (int p = 0; p <= r; ++p)
        for (int j = 0; j <= table.j_max(p); ++j) {
            const LaurentPoly& c = table.at(p, j);
            const Word w = Word::power(Letter::A, static_cast<unsigned>(2 * r + 1 - 2 * p - j)) * middle *
                           Word::power(Letter::A, static_cast<unsigned>(j));
            acc.add(w, RingElement(RhoMonomial{static_cast<unsigned>(p), 0}, (j + p) % 2 == 0 ? c : -c));
        }
    NcPoly lhs = acc.finish();
    return family == 1 ? lhs : dagger(lhs);
}

VerificationReport verify_relation(const CoeffTable& table, int family) {
    if (family != 1 && family != 2) throw std::invalid_argument("relation family must be 1 or 2");
    const auto start = std::chrono::steady_clock::now();
    NormalFormStats stats;
    NcPoly residual = normal_form(build_relation_lhs(table, 1), &stats);
    VerificationReport rep;
    rep.r = table.r();
    rep.family = family;
    rep.route = table.route();
    rep.peak_term_count = stats.peak_term_count;
    rep.via_dagger = family == 2;
    rep.residual = family == 1 ? std::move(residual) : dagger(residual);
    rep.residual_term_count = rep.residual.size();
    rep.zero = rep.residual.is_zero();
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

VerificationReport verify_relation(int r, Route route, int family) {
    return verify_relation(coefficients_for(route, r), family);
}

CrossCheckReport cross_check_routes(int r_max, bool include_literal) {
    if (r_max < 1) throw std::domain_error("cross_check_routes requires r_max >= 1");
    CrossCheckReport rep;
    rep.r_max = r_max;
    rep.routes = {Route::Genfun, Route::Recursion, Route::Closed};
    if (include_literal) rep.routes.push_back(Route::ClosedLiteral);
    const auto recursion = recursion_coeffs(r_max);
    for (int r = 1; r <= r_max && rep.agree(); ++r) {
        const CoeffTable oracle = reduced_genfun_coeffs(r);
        std::vector<CoeffTable> others{recursion[static_cast<std::size_t>(r - 1)], closedform_coeffs(r, false)};
        if (include_literal) others.push_back(closedform_coeffs(r, true));
        for (int p = 0; p <= r && rep.agree(); ++p)
            for (int j = 0; j <= oracle.j_max(p) && rep.agree(); ++j)
                for (const auto& t : others)
                    if (t.at(p, j) != oracle.at(p, j)) {
                        rep.first_mismatch = RouteMismatch{r, p, j, Route::Genfun, t.route(), oracle.at(p, j), t.at(p, j)};
                        break;
                    }
    }
    return rep;
}

}  // namespace qdg
