#pragma once

#include "qdg/eta_table.hpp"
#include "qdg/ncpoly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdg {

/// Right-hand side of the rewriting rule
///   A^3 A* -> [3]_q A^2 A* A - [3]_q A A* A^2 + A* A^3 + rho0 (A A* - A* A).
const NcPoly& rule_rhs();
/// Left-hand side A^3 A* minus rule_rhs(): the defining relation (first family).
NcPoly defining_relation();

/// Termination measure of a word: (length, sum over A* of the A's to its left).
std::pair<unsigned, unsigned> reduction_measure(const Word& w);

struct ReductionStep {
    Word word;               ///< the word that was rewritten
    unsigned position = 0;   ///< offset of the A A A A* occurrence inside it
    std::size_t result_terms = 0;  ///< number of terms after the step
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    NcPoly final;
    std::size_t step_count() const noexcept { return steps.size(); }
    /// One line per step: "<word> -> <k> terms @pos <i>".
    std::string to_text() const;
};

/// Rewrites the leftmost occurrence of A A A A* in the first reducible word
/// (canonical order). Returns x unchanged if x is already reduced. The step's
/// new words are asserted to have strictly smaller measure (IntegrityError).
NcPoly reduce_once(const NcPoly& x, ReductionStep* step = nullptr);

/// Applies the rule to `word` at `position` inside x (used to replay traces).
NcPoly apply_rule_at(const NcPoly& x, const Word& word, unsigned position);

/// Iterates reduce_once to the fixed point, optionally recording every step.
NcPoly normal_form_stepwise(const NcPoly& x, ReductionTrace* trace = nullptr);

/// True iff no word of x contains A A A A*.
bool is_normal_form(const NcPoly& x);

/// One term rho0^rho_power * coeff * A^left A* A^right of the expansion of A^n A*.
struct AstarTerm {
    unsigned rho_power;
    LaurentPoly coeff;
    unsigned left;
    unsigned right;
};

/// Ordered expansion of A^n A* assembled from the eta tables (memoized,
/// thread-safe). n = 0, 1, 2 give the word itself.
const std::vector<AstarTerm>& power_astar_terms(unsigned n);
/// The same as an NcPoly; equals normal_form(A^n A*). Requires n >= 1.
NcPoly power_astar_expansion(unsigned n);

struct NormalFormStats {
    std::size_t peak_term_count = 0;  ///< largest intermediate state count
    std::size_t rounds = 0;           ///< A* letters processed per word (max)
};

/// Normal form by block-wise expansion: every A^n A* is replaced wholesale by
/// its ordered expansion, left to right. The one-rule system has no
/// self-overlaps, so this equals the fixed point of reduce_once.
NcPoly normal_form(const NcPoly& x, NormalFormStats* stats = nullptr);

}  // namespace qdg
