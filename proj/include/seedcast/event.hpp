#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace seedcast {

// Subset of world states, stored as a bitset over state indices.
class Event {
public:
    Event() = default;
    explicit Event(size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

    static Event none(size_t n) { return Event(n); }
    static Event all(size_t n) {
        Event e(n);
        for (size_t i = 0; i < n; ++i) e.set(i);
        return e;
    }

    size_t size() const { return n_; }
    void set(size_t i) { bits_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(size_t i) { bits_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }

    Event operator&(const Event& o) const {
        Event r(n_);
        for (size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] & o.bits_[w];
        return r;
    }
    Event operator|(const Event& o) const {
        Event r(n_);
        for (size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] | o.bits_[w];
        return r;
    }
    Event operator~() const {
        Event r(n_);
        for (size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = ~bits_[w];
        r.trim();
        return r;
    }
    Event& operator&=(const Event& o) {
        for (size_t w = 0; w < bits_.size(); ++w) bits_[w] &= o.bits_[w];
        return *this;
    }
    bool operator==(const Event& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Event& o) const { return !(*this == o); }

    bool is_subset_of(const Event& o) const {
        for (size_t w = 0; w < bits_.size(); ++w) {
            if (bits_[w] & ~o.bits_[w]) return false;
        }
        return true;
    }
    bool any() const {
        for (auto w : bits_) {
            if (w) return true;
        }
        return false;
    }
    size_t count() const {
        size_t c = 0;
        for (auto w : bits_) c += static_cast<size_t>(__builtin_popcountll(w));
        return c;
    }

private:
    void trim() {
        if (n_ % 64 != 0 && !bits_.empty()) {
            bits_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
        }
    }

    size_t n_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace seedcast
