#pragma once

#include <cstdint>
#include <vector>

#include "domkit/model.hpp"
#include "domkit/ratio_formula.hpp"

namespace domkit {

/// [(d^k, e), (d^(k-1), d+e, d^(k-1), 1^e), (d-1)] in that order.
std::vector<BlockStructure> candidate_structures(const Decomposition& dec);

/// True iff the periodic set dominates Cay(Z, S). Checking one period suffices.
bool verify_dominating(const PeriodicSet& set, const DifferenceSet& diffs);

/// True iff every integer is dominated exactly once. Offsets of S u {0} that
/// collide mod p are counted separately, since they are distinct in Z.
bool verify_efficient(const PeriodicSet& set, const DifferenceSet& diffs);

struct Construction {
    PeriodicSet set;
    RatioResult ratio;
};

/// Minimum-density candidate (period-d singleton in the modular case),
/// machine-verified before it is returned. Ties prefer the earlier candidate.
/// Throws ConsistencyError("construction invalid for (d,s)") if the chosen
/// set fails to dominate or its density differs from the formula.
Construction construct_best(std::int64_t d, std::int64_t s);

/// Every block of `set` satisfies 1 <= b <= s+1 (s > 0) or 1 <= b <= d-1-s (s < 0).
/// Throws DomainError("not a dominating set") if `set` does not dominate the family.
bool check_block_lemma(const PeriodicSet& set, std::int64_t d, std::int64_t s);

}  // namespace domkit
