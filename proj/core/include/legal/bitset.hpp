#ifndef LEGAL_BITSET_HPP
#define LEGAL_BITSET_HPP

#include <cstdint>
#include <cassert>
#include <vector>
#include <string>
#include <bit>

namespace legal {

// Fixed-width dynamic bitset. All binary operations require equal widths.
// Vertex sets / states are instances of this, so the hot loops (orbit
// enumeration, induced-subgraph BFS) run on whole machine words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bitset of(int n, std::initializer_list<int> bits) {
        Bitset b(n);
        for (int i : bits) b.set(i);
        return b;
    }
    static Bitset of(int n, const std::vector<int>& bits) {
        Bitset b(n);
        for (int i : bits) b.set(i);
        return b;
    }
    // Low n bits of a machine-word mask (n <= 64).
    static Bitset from_mask(int n, uint64_t mask) {
        Bitset b(n);
        if (!b.w_.empty()) b.w_[0] = mask;
        return b;
    }

    int size() const { return n_; }
    int words() const { return (int)w_.size(); }
    uint64_t word(int i) const { return w_[i]; }

    void set(int i) { assert(i >= 0 && i < n_); w_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { assert(i >= 0 && i < n_); w_[i >> 6] &= ~(1ull << (i & 63)); }
    void flip(int i) { assert(i >= 0 && i < n_); w_[i >> 6] ^= 1ull << (i & 63); }
    bool test(int i) const { assert(i >= 0 && i < n_); return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : w_) w = 0; }
    void set_all() {
        for (auto& w : w_) w = ~0ull;
        trim();
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }
    bool all() const { return count() == n_; }

    // Index of lowest set bit, or -1.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return (int)(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }
    // Next set bit strictly after i, or -1.
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        size_t wi = i >> 6;
        uint64_t w = w_[wi] & (~0ull << (i & 63));
        while (true) {
            if (w) return (int)(wi * 64 + std::countr_zero(w));
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
        return v;
    }

    Bitset& operator^=(const Bitset& o) { bin(o, [](uint64_t& a, uint64_t b) { a ^= b; }); return *this; }
    Bitset& operator|=(const Bitset& o) { bin(o, [](uint64_t& a, uint64_t b) { a |= b; }); return *this; }
    Bitset& operator&=(const Bitset& o) { bin(o, [](uint64_t& a, uint64_t b) { a &= b; }); return *this; }
    Bitset& andnot(const Bitset& o) { bin(o, [](uint64_t& a, uint64_t b) { a &= ~b; }); return *this; }

    friend Bitset operator^(Bitset a, const Bitset& b) { a ^= b; return a; }
    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    Bitset operator~() const {
        Bitset r(*this);
        for (auto& w : r.w_) w = ~w;
        r.trim();
        return r;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    uint64_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : w_) { h ^= w; h *= 1099511628211ull; }
        return h;
    }

    std::string to_string() const { // e.g. "{0,3,7}"
        std::string s = "{";
        for (int i = first(); i >= 0; i = next(i)) {
            if (s.size() > 1) s += ",";
            s += std::to_string(i);
        }
        return s + "}";
    }

private:
    template <class F> void bin(const Bitset& o, F f) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) f(w_[i], o.w_[i]);
    }
    void trim() {
        if (n_ & 63) w_.back() &= (~0ull >> (64 - (n_ & 63)));
    }
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace legal

#endif
