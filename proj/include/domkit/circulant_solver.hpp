#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domkit/model.hpp"

namespace domkit {

/// Minimum dominating set of a circulant digraph together with its witness.
struct GammaCertificate {
    std::int64_t gamma = 0;
    std::vector<std::int64_t> witness;  // ascending residues in [0, n)
    std::uint64_t explored = 0;         // search nodes visited
};

/// Cay(Z_p, S mod p) with collision counts.
CirculantInstance reduce_mod(const DifferenceSet& diffs, std::int64_t p);

/// Exact domination number by branch and bound over coverage bitmasks.
///
/// Vertex 0 is fixed in the solution (rotations are automorphisms). Each node
/// branches on the uncovered vertex with the fewest non-excluded dominators;
/// after a dominator's subtree is finished it is excluded for its siblings.
/// Nodes are pruned against ceil(uncovered / best available gain).
GammaCertificate gamma_exact(const CirculantInstance& inst);

/// Exhaustive oracle: tries all subsets of size 1, 2, ... in turn. n <= 24.
/// Throws DomainError("oracle size limit") above that.
std::int64_t gamma_bruteforce(const CirculantInstance& inst);

inline constexpr std::int64_t kOracleMaxN = 24;

/// A set covering every vertex exactly once, counting colliding offsets
/// separately, or nullopt if none exists.
std::optional<std::vector<std::int64_t>> perfect_code_exists(const CirculantInstance& inst);

/// True iff W dominates the instance. Throws DomainError on residues outside [0, n).
bool verify_witness(const CirculantInstance& inst, const std::vector<std::int64_t>& witness);

/// Exactly-once coverage check with multiplicity; same range check as verify_witness.
bool verify_perfect(const CirculantInstance& inst, const std::vector<std::int64_t>& witness);

}  // namespace domkit
