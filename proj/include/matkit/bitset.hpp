#ifndef MATKIT_BITSET_HPP
#define MATKIT_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <vector>
#include <cassert>

namespace matkit {

// Fixed-universe bitset for edge-id sets. Universe size is set at
// construction; all set operations require matching universes.
class Bitset {
public:
    Bitset() : n_(0) {}
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    bool contains(const Bitset& other) const {
        assert(n_ == other.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (other.w_[i] & ~w_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // set difference
    Bitset& operator-=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }
    bool operator<(const Bitset& o) const { return w_ < o.w_; }

    static Bitset full(int n) {
        Bitset b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }
    static Bitset of(int n, const std::vector<int>& elems) {
        Bitset b(n);
        for (int e : elems) b.set(e);
        return b;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t b = 0; b < w_.size(); ++b) {
            uint64_t w = w_[b];
            while (w) {
                int i = int(b << 6) + __builtin_ctzll(w);
                f(i);
                w &= w - 1;
            }
        }
    }

private:
    int n_;
    std::vector<uint64_t> w_;
};

} // namespace matkit

#endif
