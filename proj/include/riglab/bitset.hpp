#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace riglab {

// Fixed-size bitset sized at runtime. Used for adjacency rows.
class DynBitset {
  public:
    DynBitset() = default;
    explicit DynBitset(int nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= (1ULL << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // popcount(this & ~other)
    int count_and_not(const DynBitset& other) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & ~other.words_[i]);
        return c;
    }

    int count_and(const DynBitset& other) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace riglab
