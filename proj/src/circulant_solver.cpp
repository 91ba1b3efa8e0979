#include "domkit/circulant_solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "bitset.hpp"
#include "domkit/error.hpp"

namespace domkit {

using detail::Bitset;

CirculantInstance reduce_mod(const DifferenceSet& diffs, std::int64_t p) {
    return CirculantInstance(p, diffs.elements());
}

namespace {

struct Neighbourhoods {
    std::size_t n;
    std::vector<Bitset> cover;                      // cover[v]: vertices v dominates
    std::vector<std::vector<std::size_t>> dominators;  // dominators[x]: vertices dominating x

    explicit Neighbourhoods(const CirculantInstance& inst)
        : n(static_cast<std::size_t>(inst.modulus())), cover(n, Bitset(n)), dominators(n) {
        const auto offsets = inst.offsets();
        const auto m = inst.modulus();
        for (std::size_t v = 0; v < n; ++v) {
            for (auto t : offsets) {
                auto target = static_cast<std::size_t>(mod(static_cast<std::int64_t>(v) + t, m));
                cover[v].set(target);
                dominators[target].push_back(v);
            }
        }
    }
};

class BranchAndBound {
public:
    explicit BranchAndBound(const CirculantInstance& inst) : nb_(inst), excluded_(nb_.n, 0) {}

    GammaCertificate run() {
        Bitset covered = nb_.cover[0];
        chosen_ = {0};
        excluded_[0] = 1;
        greedy(covered);
        search(covered);
        GammaCertificate cert;
        cert.gamma = static_cast<std::int64_t>(best_.size());
        for (auto v : best_) cert.witness.push_back(static_cast<std::int64_t>(v));
        std::sort(cert.witness.begin(), cert.witness.end());
        cert.explored = explored_;
        return cert;
    }

private:
    void greedy(Bitset covered) {
        std::vector<std::size_t> picks = chosen_;
        while (covered.count() < nb_.n) {
            std::size_t best_v = 0, best_gain = 0;
            for (std::size_t v = 0; v < nb_.n; ++v) {
                auto g = covered.count_new(nb_.cover[v]);
                if (g > best_gain) {
                    best_gain = g;
                    best_v = v;
                }
            }
            covered |= nb_.cover[best_v];
            picks.push_back(best_v);
        }
        best_ = std::move(picks);
    }

    // Largest of three bounds on the picks still needed:
    //  - the fewest largest remaining gains that sum to the uncovered count,
    //  - sum over uncovered x of 1 / (best gain among x's dominators),
    //  - a greedy packing of uncovered vertices with disjoint dominator sets.
    std::size_t lower_bound(const Bitset& covered, std::size_t uncovered) {
        gains_.assign(nb_.n, 0);
        sorted_gains_.clear();
        for (std::size_t v = 0; v < nb_.n; ++v) {
            if (excluded_[v]) continue;
            gains_[v] = covered.count_new(nb_.cover[v]);
            if (gains_[v] > 0) sorted_gains_.push_back(gains_[v]);
        }
        std::sort(sorted_gains_.begin(), sorted_gains_.end(), std::greater<>());
        std::size_t by_gain = nb_.n + 1;
        for (std::size_t i = 0, sum = 0; i < sorted_gains_.size(); ++i) {
            sum += sorted_gains_[i];
            if (sum >= uncovered) {
                by_gain = i + 1;
                break;
            }
        }
        if (by_gain > nb_.n) return by_gain;

        double fractional = 0;
        std::size_t packing = 0;
        used_.assign(nb_.n, 0);
        for (std::size_t x = 0; x < nb_.n; ++x) {
            if (covered.test(x)) continue;
            std::size_t best_gain = 0;
            bool disjoint = true;
            for (auto v : nb_.dominators[x]) {
                if (excluded_[v]) continue;
                best_gain = std::max(best_gain, gains_[v]);
                disjoint = disjoint && !used_[v];
            }
            if (best_gain == 0) return nb_.n + 1;
            fractional += 1.0 / static_cast<double>(best_gain);
            if (disjoint) {
                ++packing;
                for (auto v : nb_.dominators[x]) used_[v] = 1;
            }
        }
        const auto by_fraction = static_cast<std::size_t>(std::ceil(fractional - 1e-9));
        return std::max({by_gain, by_fraction, packing});
    }

    void search(const Bitset& covered) {
        ++explored_;
        const auto uncovered = nb_.n - covered.count();
        if (uncovered == 0) {
            if (chosen_.size() < best_.size()) best_ = chosen_;
            return;
        }
        if (chosen_.size() + 1 >= best_.size()) return;
        if (chosen_.size() + lower_bound(covered, uncovered) >= best_.size()) return;

        std::size_t branch_vertex = nb_.n, fewest = nb_.n + 1;
        for (std::size_t x = 0; x < nb_.n; ++x) {
            if (covered.test(x)) continue;
            std::size_t avail = 0;
            for (auto v : nb_.dominators[x]) avail += excluded_[v] ? 0 : 1;
            if (avail < fewest) {
                fewest = avail;
                branch_vertex = x;
                if (avail <= 1) break;
            }
        }
        if (fewest == 0) return;

        std::vector<std::pair<std::size_t, std::size_t>> options;  // (gain, vertex)
        for (auto v : nb_.dominators[branch_vertex])
            if (!excluded_[v]) options.emplace_back(covered.count_new(nb_.cover[v]), v);
        std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });

        std::vector<std::size_t> newly_excluded;
        for (const auto& [gain, v] : options) {
            Bitset next = covered;
            next |= nb_.cover[v];
            chosen_.push_back(v);
            search(next);
            chosen_.pop_back();
            excluded_[v] = 1;
            newly_excluded.push_back(v);
        }
        for (auto v : newly_excluded) excluded_[v] = 0;
    }

    Neighbourhoods nb_;
    std::vector<char> excluded_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_;
    std::vector<std::size_t> gains_;
    std::vector<std::size_t> sorted_gains_;
    std::vector<char> used_;
    std::uint64_t explored_ = 0;
};

void check_range(const CirculantInstance& inst, const std::vector<std::int64_t>& witness) {
    for (auto w : witness)
        if (w < 0 || w >= inst.modulus())
            throw DomainError("witness residue " + std::to_string(w) + " outside [0, " +
                              std::to_string(inst.modulus()) + ")");
}

}  // namespace

GammaCertificate gamma_exact(const CirculantInstance& inst) { return BranchAndBound(inst).run(); }

std::int64_t gamma_bruteforce(const CirculantInstance& inst) {
    const auto n = inst.modulus();
    if (n > kOracleMaxN) throw DomainError("oracle size limit");
    std::vector<std::uint32_t> closed(static_cast<std::size_t>(n), 0);
    for (std::int64_t v = 0; v < n; ++v)
        for (auto t : inst.offsets()) closed[static_cast<std::size_t>(v)] |= std::uint32_t{1} << mod(v + t, n);
    const std::uint32_t full = n == 32 ? ~0U : (std::uint32_t{1} << n) - 1;

    for (std::int64_t size = 1; size <= n; ++size) {
        std::vector<std::int64_t> pick(static_cast<std::size_t>(size));
        for (std::int64_t i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint32_t mask = 0;
            for (auto v : pick) mask |= closed[static_cast<std::size_t>(v)];
            if (mask == full) return size;
            // next combination in lexicographic order
            std::int64_t i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (auto j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return n;
}

std::optional<std::vector<std::int64_t>> perfect_code_exists(const CirculantInstance& inst) {
    const auto n = inst.modulus();
    for (const auto& [r, count] : inst.multiplicity())
        if (count > 1) return std::nullopt;  // any chosen vertex would double-cover v + r
    if (n % inst.offset_count() != 0) return std::nullopt;

    Neighbourhoods nb(inst);
    std::vector<std::size_t> chosen{0};

    // Exact cover: the lowest uncovered vertex must be hit by exactly one
    // dominator whose neighbourhood is still disjoint from the covered part.
    std::function<bool(const Bitset&)> extend = [&](const Bitset& covered) {
        auto x = covered.first_unset();
        if (x == nb.n) return true;
        for (auto v : nb.dominators[x]) {
            if (covered.intersects(nb.cover[v])) continue;
            Bitset next = covered;
            next |= nb.cover[v];
            chosen.push_back(v);
            if (extend(next)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!extend(nb.cover[0])) return std::nullopt;

    std::vector<std::int64_t> witness(chosen.begin(), chosen.end());
    std::sort(witness.begin(), witness.end());
    return witness;
}

bool verify_witness(const CirculantInstance& inst, const std::vector<std::int64_t>& witness) {
    check_range(inst, witness);
    const auto n = inst.modulus();
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (auto w : witness)
        for (auto t : inst.offsets()) hit[static_cast<std::size_t>(mod(w + t, n))] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

bool verify_perfect(const CirculantInstance& inst, const std::vector<std::int64_t>& witness) {
    check_range(inst, witness);
    const auto n = inst.modulus();
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (auto w : witness)
        for (const auto& [t, count] : inst.multiplicity()) hits[static_cast<std::size_t>(mod(w + t, n))] += count;
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace domkit
