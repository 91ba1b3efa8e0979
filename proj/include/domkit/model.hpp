#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "domkit/rational.hpp"

namespace domkit {

/// Finite set of nonzero integers S defining the integer distance digraph
/// Cay(Z, S), where x -> x + t for every t in S.
class DifferenceSet {
public:
    /// Sorts and validates; throws DomainError on empty input, zero, or duplicates.
    explicit DifferenceSet(std::vector<std::int64_t> elements);

    /// {1, 2, ..., d-2, s}. Requires d >= 2 and s outside [0, d-2].
    static DifferenceSet family(std::int64_t d, std::int64_t s);

    const std::vector<std::int64_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    /// S with the implicit self-offset 0 prepended, in ascending order.
    std::vector<std::int64_t> with_zero() const;

    friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;

private:
    std::vector<std::int64_t> elements_;
};

/// Periodic subset { r + i*p : r in residues, i in Z } of the integers.
/// Residues are taken in [0, p).
class PeriodicSet {
public:
    PeriodicSet(std::int64_t period, std::vector<std::int64_t> residues);

    std::int64_t period() const { return period_; }
    const std::vector<std::int64_t>& residues() const { return residues_; }
    bool contains(std::int64_t x) const;

    friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

private:
    std::int64_t period_;
    std::vector<std::int64_t> residues_;
};

/// Gap sequence (b1, ..., bl) between consecutive elements, repeated
/// bi-infinitely.
class BlockStructure {
public:
    explicit BlockStructure(std::vector<std::int64_t> sizes);

    const std::vector<std::int64_t>& sizes() const { return sizes_; }
    std::int64_t total() const;

    friend bool operator==(const BlockStructure&, const BlockStructure&) = default;

private:
    std::vector<std::int64_t> sizes_;
};

/// Circulant digraph Cay(Z_n, C). `multiplicity` counts, for every residue,
/// how many elements of S u {0} reduce onto it (the implicit 0 included), so
/// the counts sum to |S| + 1. A collision shows up as a count above one.
class CirculantInstance {
public:
    /// Reduces each value mod n; 0 mod n is kept in the connection set.
    CirculantInstance(std::int64_t modulus, const std::vector<std::int64_t>& values);

    std::int64_t modulus() const { return modulus_; }
    const std::vector<std::int64_t>& connection() const { return connection_; }
    const std::map<std::int64_t, int>& multiplicity() const { return multiplicity_; }

    /// Distinct coverage offsets: connection u {0}, ascending.
    std::vector<std::int64_t> offsets() const;
    /// Total number of offsets counted with multiplicity.
    int offset_count() const;
    /// Adds one residue to the connection set (used by monotonicity checks).
    CirculantInstance with_extra(std::int64_t residue) const;

private:
    std::int64_t modulus_;
    std::vector<std::int64_t> connection_;
    std::vector<std::int64_t> raw_;
    std::map<std::int64_t, int> multiplicity_;
};

enum class Sign { positive, negative };

/// s = d*k + e - 1 (positive) or s = -d*k + d - e - 1 (negative), k >= 1, 1 <= e <= d-1.
struct Decomposition {
    std::int64_t d;
    std::int64_t s;
    Sign sign;
    std::int64_t k;
    std::int64_t e;

    std::int64_t reconstruct() const { return sign == Sign::positive ? d * k + e - 1 : -d * k + d - e - 1; }
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Mathematical mod: result in [0, m).
inline std::int64_t mod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

Rational density(const PeriodicSet& set);
BlockStructure blocks_of(const PeriodicSet& set);
PeriodicSet block_to_periodic(const BlockStructure& blocks);

}  // namespace domkit
