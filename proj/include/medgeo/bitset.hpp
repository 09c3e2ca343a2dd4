#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "medgeo/errors.hpp"

namespace medgeo {

/**
 * Fixed-size dynamic bitset. Used both as a set of points (PointSet) and as
 * a set of wall indices (WallFamily). Two bitsets interoperate only when
 * their universe sizes match.
 */
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {
        if (n < 0) throw invalid_input("negative bitset size");
    }
    static Bitset of(int n, std::initializer_list<int> idx) {
        Bitset b(n);
        for (int i : idx) b.set(i);
        return b;
    }
    static Bitset full(int n) {
        Bitset b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    int size() const { return n_; }

    void set(int i) { check(i); w_[i >> 6] |= u64(1) << (i & 63); }
    void reset(int i) { check(i); w_[i >> 6] &= ~(u64(1) << (i & 63)); }
    void assign(int i, bool v) { v ? set(i) : reset(i); }
    bool test(int i) const { check(i); return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (u64 w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (u64 w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset operator&(const Bitset& o) const { return zip(o, [](u64 a, u64 b) { return a & b; }); }
    Bitset operator|(const Bitset& o) const { return zip(o, [](u64 a, u64 b) { return a | b; }); }
    Bitset operator^(const Bitset& o) const { return zip(o, [](u64 a, u64 b) { return a ^ b; }); }
    /// Set difference: bits in *this and not in o.
    Bitset minus(const Bitset& o) const { return zip(o, [](u64 a, u64 b) { return a & ~b; }); }
    Bitset complement() const {
        Bitset r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
        r.trim();
        return r;
    }

    Bitset& operator&=(const Bitset& o) { return zip_into(o, [](u64 a, u64 b) { return a & b; }); }
    Bitset& operator|=(const Bitset& o) { return zip_into(o, [](u64 a, u64 b) { return a | b; }); }
    Bitset& operator^=(const Bitset& o) { return zip_into(o, [](u64 a, u64 b) { return a ^ b; }); }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool subset_of(const Bitset& o) const {
        same(o);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        same(o);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    bool disjoint(const Bitset& o) const { return !intersects(o); }

    /// Smallest set index, or -1 when empty.
    int first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            u64 w = w_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(int(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    using u64 = std::uint64_t;
    void check(int i) const {
        if (i < 0 || i >= n_) throw invalid_input("bitset index out of range");
    }
    void same(const Bitset& o) const {
        if (n_ != o.n_) throw verification_error("bitset size mismatch");
    }
    void trim() {
        if (n_ & 63) w_.back() &= (u64(1) << (n_ & 63)) - 1;
    }
    template <typename Op>
    Bitset zip(const Bitset& o, Op op) const {
        same(o);
        Bitset r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = op(w_[k], o.w_[k]);
        return r;
    }
    template <typename Op>
    Bitset& zip_into(const Bitset& o, Op op) {
        same(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] = op(w_[k], o.w_[k]);
        return *this;
    }

    int n_ = 0;
    std::vector<u64> w_;
};

using PointSet = Bitset;
using WallFamily = Bitset;

} // namespace medgeo
