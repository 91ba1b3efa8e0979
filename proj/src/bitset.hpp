#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace domkit::detail {

// Fixed-width-at-runtime bitset; all operands in one search share a width.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// popcount(o & ~*this)
    std::size_t count_new(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(o.words_[i] & ~words_[i]));
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Lowest index not set, or size() if full.
    std::size_t first_unset() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (~words_[i] != 0) {
                std::size_t idx = i * 64 + static_cast<std::size_t>(std::countr_one(words_[i]));
                return idx < bits_ ? idx : bits_;
            }
        }
        return bits_;
    }

    std::size_t size() const { return bits_; }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace domkit::detail
