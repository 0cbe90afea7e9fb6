#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace retractlab {

/// Dynamic bit set sized at construction. Used for element subsets,
/// order-matrix rows, and relation matrices. Comparison treats the set
/// as a little-endian integer, which gives a stable canonical order.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    static DynBitset from_indices(int nbits, std::initializer_list<int> idx) {
        DynBitset b(nbits);
        for (int i : idx) b.set(i);
        return b;
    }
    static DynBitset from_indices(int nbits, const std::vector<int>& idx) {
        DynBitset b(nbits);
        for (int i : idx) b.set(i);
        return b;
    }

    int size() const { return n_; }

    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    void set_all() {
        std::fill(w_.begin(), w_.end(), ~uint64_t{0});
        trim();
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool none() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    DynBitset& operator&=(const DynBitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    /// set difference
    DynBitset& operator-=(const DynBitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
    friend DynBitset operator-(DynBitset a, const DynBitset& b) { return a -= b; }

    bool is_subset_of(const DynBitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const DynBitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    /// OR `src` into this set with all bit positions shifted up by `offset`.
    void or_shifted(const DynBitset& src, int offset) {
        src.for_each([&](int i) { set(i + offset); });
    }

    int find_first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
        return -1;
    }

    /// highest set bit, -1 when empty
    int top_bit() const {
        for (int i = int(w_.size()) - 1; i >= 0; --i)
            if (w_[i]) return i * 64 + 63 - __builtin_clzll(w_[i]);
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(int(i * 64) + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    std::string to_string01() const {
        std::string s(n_, '0');
        for_each([&](int i) { s[i] = '1'; });
        return s;
    }

    bool operator==(const DynBitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const DynBitset& o) const { return !(*this == o); }

    bool operator<(const DynBitset& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (int i = int(w_.size()) - 1; i >= 0; --i)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

/// Subset of a lattice's elements.
using SubsetMask = DynBitset;

}  // namespace retractlab
