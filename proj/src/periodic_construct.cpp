#include "domkit/periodic_construct.hpp"

#include <string>

#include "domkit/error.hpp"

namespace domkit {

std::vector<BlockStructure> candidate_structures(const Decomposition& dec) {
    const auto d = dec.d, k = dec.k, e = dec.e;

    std::vector<std::int64_t> short_blocks(static_cast<std::size_t>(k), d);
    short_blocks.push_back(e);

    std::vector<std::int64_t> long_blocks(static_cast<std::size_t>(k - 1), d);
    long_blocks.push_back(d + e);
    long_blocks.insert(long_blocks.end(), static_cast<std::size_t>(k - 1), d);
    long_blocks.insert(long_blocks.end(), static_cast<std::size_t>(e), 1);

    return {BlockStructure(std::move(short_blocks)), BlockStructure(std::move(long_blocks)),
            BlockStructure({d - 1})};
}

namespace {

// Number of offsets t in S u {0} with x - t in the set, for every x in [0, p).
std::vector<int> coverage_counts(const PeriodicSet& set, const DifferenceSet& diffs) {
    const auto p = set.period();
    std::vector<int> counts(static_cast<std::size_t>(p), 0);
    const auto offsets = diffs.with_zero();
    for (auto r : set.residues())
        for (auto t : offsets) ++counts[static_cast<std::size_t>(mod(r + t, p))];
    return counts;
}

}  // namespace

bool verify_dominating(const PeriodicSet& set, const DifferenceSet& diffs) {
    for (int c : coverage_counts(set, diffs))
        if (c == 0) return false;
    return true;
}

bool verify_efficient(const PeriodicSet& set, const DifferenceSet& diffs) {
    for (int c : coverage_counts(set, diffs))
        if (c != 1) return false;
    return true;
}

Construction construct_best(std::int64_t d, std::int64_t s) {
    auto ratio = domination_ratio(d, s);
    const auto diffs = DifferenceSet::family(d, s);

    PeriodicSet chosen(d, {0});
    if (ratio.decomposition) {
        const auto candidates = candidate_structures(*ratio.decomposition);
        const BlockStructure* best = &candidates.front();
        for (const auto& c : candidates) {
            auto dc = Rational(static_cast<std::int64_t>(c.sizes().size()), c.total());
            auto db = Rational(static_cast<std::int64_t>(best->sizes().size()), best->total());
            if (dc < db) best = &c;
        }
        chosen = block_to_periodic(*best);
    }

    if (!verify_dominating(chosen, diffs) || density(chosen) != ratio.value)
        throw ConsistencyError("construction invalid for (" + std::to_string(d) + "," + std::to_string(s) + ")");
    return {std::move(chosen), std::move(ratio)};
}

bool check_block_lemma(const PeriodicSet& set, std::int64_t d, std::int64_t s) {
    const auto diffs = DifferenceSet::family(d, s);
    if (!verify_dominating(set, diffs)) throw DomainError("not a dominating set");
    const std::int64_t bound = s > 0 ? s + 1 : d - 1 - s;
    const auto blocks = blocks_of(set);
    for (auto b : blocks.sizes())
        if (b < 1 || b > bound) return false;
    return true;
}

}  // namespace domkit
