#include "domkit/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "domkit/error.hpp"

namespace domkit {

DifferenceSet::DifferenceSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw DomainError("difference set must be nonempty");
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw DomainError("difference set has duplicate elements");
    if (std::binary_search(elements_.begin(), elements_.end(), 0))
        throw DomainError("difference set must not contain 0");
}

DifferenceSet DifferenceSet::family(std::int64_t d, std::int64_t s) {
    if (d < 2) throw DomainError("d must be at least 2");
    if (s >= 0 && s <= d - 2) throw DomainError("degenerate S");
    std::vector<std::int64_t> elems;
    for (std::int64_t i = 1; i <= d - 2; ++i) elems.push_back(i);
    elems.push_back(s);
    return DifferenceSet(std::move(elems));
}

std::vector<std::int64_t> DifferenceSet::with_zero() const {
    std::vector<std::int64_t> out = elements_;
    out.insert(std::lower_bound(out.begin(), out.end(), 0), 0);
    return out;
}

PeriodicSet::PeriodicSet(std::int64_t period, std::vector<std::int64_t> residues)
    : period_(period), residues_(std::move(residues)) {
    if (period_ < 1) throw DomainError("period must be positive");
    std::sort(residues_.begin(), residues_.end());
    residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
    for (auto r : residues_)
        if (r < 0 || r >= period_)
            throw DomainError("residue " + std::to_string(r) + " outside [0, " + std::to_string(period_) + ")");
}

bool PeriodicSet::contains(std::int64_t x) const {
    return std::binary_search(residues_.begin(), residues_.end(), mod(x, period_));
}

BlockStructure::BlockStructure(std::vector<std::int64_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw DomainError("block structure must be nonempty");
    for (auto b : sizes_)
        if (b < 1) throw DomainError("block sizes must be positive");
}

std::int64_t BlockStructure::total() const { return std::accumulate(sizes_.begin(), sizes_.end(), std::int64_t{0}); }

CirculantInstance::CirculantInstance(std::int64_t modulus, const std::vector<std::int64_t>& values)
    : modulus_(modulus) {
    if (modulus_ < 1) throw DomainError("modulus must be positive");
    multiplicity_[0] = 1;
    for (auto v : values) {
        auto r = mod(v, modulus_);
        raw_.push_back(v);
        connection_.push_back(r);
        ++multiplicity_[r];
    }
    std::sort(connection_.begin(), connection_.end());
    connection_.erase(std::unique(connection_.begin(), connection_.end()), connection_.end());
}

std::vector<std::int64_t> CirculantInstance::offsets() const {
    std::vector<std::int64_t> out;
    out.reserve(multiplicity_.size());
    for (const auto& [r, count] : multiplicity_) out.push_back(r);
    return out;
}

int CirculantInstance::offset_count() const {
    int total = 0;
    for (const auto& [r, count] : multiplicity_) total += count;
    return total;
}

CirculantInstance CirculantInstance::with_extra(std::int64_t residue) const {
    auto values = raw_;
    values.push_back(residue);
    return CirculantInstance(modulus_, values);
}

Rational density(const PeriodicSet& set) {
    return Rational(static_cast<std::int64_t>(set.residues().size()), set.period());
}

BlockStructure blocks_of(const PeriodicSet& set) {
    const auto& res = set.residues();
    if (res.empty()) throw DomainError("no blocks: empty dominating set");
    std::vector<std::int64_t> sizes;
    sizes.reserve(res.size());
    for (std::size_t i = 0; i + 1 < res.size(); ++i) sizes.push_back(res[i + 1] - res[i]);
    sizes.push_back(res.front() + set.period() - res.back());
    return BlockStructure(std::move(sizes));
}

PeriodicSet block_to_periodic(const BlockStructure& blocks) {
    std::vector<std::int64_t> residues;
    std::int64_t pos = 0;
    for (auto b : blocks.sizes()) {
        residues.push_back(pos);
        pos += b;
    }
    return PeriodicSet(pos, std::move(residues));
}

}  // namespace domkit
