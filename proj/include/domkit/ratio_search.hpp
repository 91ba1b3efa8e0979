#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domkit/model.hpp"
#include "domkit/rational.hpp"

namespace domkit {

struct PeriodResult {
    std::int64_t period;
    std::int64_t gamma;
    Rational ratio;
};

/// Result of scanning periods 1..cap. `best_ratio` is an upper bound on the
/// domination ratio of Cay(Z, S); it is exact only if the cap reaches an
/// optimal period. The theoretical cap c * 2^c on that period is reported
/// but never searched.
struct SearchReport {
    Rational best_ratio;
    std::int64_t best_period;
    PeriodicSet best_witness;
    std::vector<PeriodResult> per_period;
    std::int64_t cap;
    std::int64_t span_c;                             // c = a + b
    std::optional<std::uint64_t> theoretical_cap;    // c * 2^c when it fits in 64 bits
};

/// Number of worker threads: DOMKIT_THREADS if set and positive, otherwise
/// the hardware concurrency.
unsigned worker_threads();

/// For each p in [1, max_period], the exact domination number of S reduced
/// mod p. Periods are solved in parallel; the reduction (min ratio, then min
/// period) does not depend on scheduling.
SearchReport search_ratio(const DifferenceSet& diffs, std::int64_t max_period);

struct ConsistencyReport {
    std::int64_t d;
    std::int64_t s;
    std::int64_t cap;
    Rational formula;
    Rational best_ratio;
    std::int64_t best_period;
    std::int64_t construction_period;
    std::int64_t gamma_at_construction;
    bool attained_at_construction;
    std::vector<std::int64_t> violating_periods;  // periods with ratio < formula
    bool consistent;
};

/// Cross-checks the closed form against the scan and the construction.
/// Throws DomainError("cap too small") if max_period is below the period of
/// the constructed set.
ConsistencyReport consistency_check(std::int64_t d, std::int64_t s, std::int64_t max_period);

}  // namespace domkit
