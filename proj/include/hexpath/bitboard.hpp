#pragma once

// Fixed-width bit vectors over board cells, indexed (y-1)*n + (x-1).
// The search engine is templated on the word count so boards up to
// n = 8 run on a single 64-bit word.

#include <array>
#include <bit>
#include <cstdint>

namespace hexpath {

template <int W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    static constexpr int capacity() { return 64 * W; }

    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (int i = 0; i < W; ++i)
            if (w[i]) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (int i = 0; i < W; ++i) c += std::popcount(w[i]);
        return c;
    }

    Bits operator|(const Bits& o) const {
        Bits r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    Bits operator&(const Bits& o) const {
        Bits r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    Bits operator~() const {
        Bits r;
        for (int i = 0; i < W; ++i) r.w[i] = ~w[i];
        return r;
    }
    Bits& operator|=(const Bits& o) {
        for (int i = 0; i < W; ++i) w[i] |= o.w[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (int i = 0; i < W; ++i) w[i] &= o.w[i];
        return *this;
    }
    Bits andnot(const Bits& o) const {
        Bits r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    bool intersects(const Bits& o) const {
        for (int i = 0; i < W; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    friend bool operator==(const Bits&, const Bits&) = default;

    // Whole-vector shifts; k must be < 64 (cell strides never exceed that).
    Bits shifted_left(int k) const {
        Bits r;
        if (k == 0) return *this;
        for (int i = W - 1; i >= 0; --i) {
            r.w[i] = w[i] << k;
            if (i > 0) r.w[i] |= w[i - 1] >> (64 - k);
        }
        return r;
    }
    Bits shifted_right(int k) const {
        Bits r;
        if (k == 0) return *this;
        for (int i = 0; i < W; ++i) {
            r.w[i] = w[i] >> k;
            if (i + 1 < W) r.w[i] |= w[i + 1] << (64 - k);
        }
        return r;
    }

    // Visit set bits in ascending index order.
    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < W; ++i) {
            std::uint64_t v = w[i];
            while (v) {
                f(64 * i + std::countr_zero(v));
                v &= v - 1;
            }
        }
    }
};

}  // namespace hexpath
