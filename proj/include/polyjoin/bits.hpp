#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace polyjoin {

/// Dynamic fixed-capacity bitset used for faces and vertex sets.
/// Word count is decided at construction and never changes; all binary
/// operations require operands of equal capacity.
class Bits {
public:
    Bits() = default;
    explicit Bits(int capacity)
        : n_(capacity), w_((capacity + 63) / 64, 0) {}

    int capacity() const { return n_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool is_subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

    friend bool operator==(const Bits& a, const Bits& b) { return a.w_ == b.w_; }

    /// Total order: by population count, then lexicographic on words.
    /// Deterministic and stable across runs; used to sort facet lists.
    friend std::strong_ordering operator<=>(const Bits& a, const Bits& b) {
        if (auto c = a.count() <=> b.count(); c != 0) return c;
        for (size_t i = a.w_.size(); i-- > 0;)
            if (auto c = a.w_[i] <=> b.w_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    /// Visit set positions in increasing order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t x = w_[wi];
            while (x) {
                int b = std::countr_zero(x);
                fn(static_cast<int>(wi * 64 + b));
                x &= x - 1;
            }
        }
    }

    std::vector<int> positions() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    size_t hash() const {
        size_t h = 0xcbf29ce484222325ull;
        for (uint64_t x : w_) {
            h ^= x;
            h *= 0x100000001b3ull;
        }
        return h;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace polyjoin
