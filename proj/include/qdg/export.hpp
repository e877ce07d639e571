#pragma once

#include "qdg/coefficients.hpp"
#include "qdg/verify.hpp"

#include <optional>
#include <string>
#include <utility>

namespace qdg {

/// {"r":int,"route":str,"entries":[{"p":int,"j":int,"laurent":{"<exp>":"<int>"}}]}
/// with exponent keys in decreasing order. Ends with a newline.
std::string coeff_table_json(const CoeffTable& table);
/// Header "r,p,j,laurent" then one row per entry (canonical Laurent string).
std::string coeff_table_csv(const CoeffTable& table);
/// LaTeX tabular; entries equal to a q-binomial are rendered as such.
std::string coeff_table_latex(const CoeffTable& table);

/// (n, k) with 1 <= k <= n/2 such that x = [n choose k]_q, if any.
std::optional<std::pair<int, int>> match_qbinomial(const LaurentPoly& x);

/// {"r","family","result","residual_term_count","peak_term_count","elapsed_ms","route"}
std::string report_json(const VerificationReport& report);
/// Cross-check summary as a JSON object.
std::string cross_check_json(const CrossCheckReport& report);

}  // namespace qdg
