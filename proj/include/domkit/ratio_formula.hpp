#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "domkit/model.hpp"
#include "domkit/rational.hpp"

namespace domkit {

/// Which branch of the closed form produced a domination ratio.
enum class RatioCase {
    eds_mod,         // s = -1 (mod d): 1/d
    e_ge_2,          // (k+1)/(dk+e)
    e_eq_1,          // (2k+e-1)/(2dk-d+2e)
    d_minus_1,       // 1/(d-1)
};

std::string_view case_name(RatioCase c);

struct RatioResult {
    Rational value;
    RatioCase case_label;
    std::optional<Decomposition> decomposition;
};

/// Throws DomainError("degenerate S") for s in [0, d-2] and
/// DomainError("modular case, no decomposition") for s = -1 (mod d).
Decomposition decompose(std::int64_t d, std::int64_t s);

/// The three candidate densities (k+1)/(dk+e), (2k+e-1)/(2dk-d+2e), 1/(d-1).
struct FormulaTerms {
    Rational short_blocks;
    Rational long_blocks;
    Rational uniform;
};
FormulaTerms formula_terms(const Decomposition& dec);

/// Domination ratio of Cay(Z, {1, ..., d-2, s}).
///
/// Computes the exact minimum of the three terms, then derives the case label
/// from the (e, d, k) conditions independently and throws ConsistencyError if
/// the two disagree.
RatioResult domination_ratio(std::int64_t d, std::int64_t s);

/// Whether the family member admits an efficient dominating set: d = 2 or s = -1 (mod d).
bool eds_exists_family(std::int64_t d, std::int64_t s);

/// (lower, upper) bounds on the domination ratio valid for any finite S.
std::pair<Rational, Rational> general_bounds(const DifferenceSet& set);

/// Divides by the gcd and picks the sign so that the first element (ordered
/// by absolute value, negatives first on ties) without a mirror partner is
/// positive. Ratio-preserving.
DifferenceSet normalize(const DifferenceSet& set);

}  // namespace domkit
