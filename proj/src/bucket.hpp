#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hopspan/types.hpp"

namespace hopspan::detail {

/// Unit-square spatial hash of small integer payloads.
class BucketGrid {
public:
    struct Key {
        long x, y;
        bool operator==(const Key&) const = default;
    };

    static Key key_of(const Point2& p) {
        return {static_cast<long>(std::floor(p.x)), static_cast<long>(std::floor(p.y))};
    }

    void insert(Key k, int value) { cells_[k].push_back(value); }

    /// Inserts into every bucket meeting the bounding box of a and b.
    void insert_box(const Point2& a, const Point2& b, int value) {
        const Key lo = key_of({std::fmin(a.x, b.x), std::fmin(a.y, b.y)});
        const Key hi = key_of({std::fmax(a.x, b.x), std::fmax(a.y, b.y)});
        for (long x = lo.x; x <= hi.x; ++x)
            for (long y = lo.y; y <= hi.y; ++y) insert({x, y}, value);
    }

    const std::vector<int>* find(Key k) const {
        auto it = cells_.find(k);
        return it == cells_.end() ? nullptr : &it->second;
    }

    template <class F>
    void for_each_in_box(const Point2& a, const Point2& b, F&& f) const {
        const Key lo = key_of({std::fmin(a.x, b.x), std::fmin(a.y, b.y)});
        const Key hi = key_of({std::fmax(a.x, b.x), std::fmax(a.y, b.y)});
        for (long x = lo.x; x <= hi.x; ++x) {
            for (long y = lo.y; y <= hi.y; ++y) {
                if (const auto* v = find({x, y})) {
                    for (int i : *v) f(i);
                }
            }
        }
    }

    template <class F>
    void for_each_cell(F&& f) const {
        for (const auto& [k, v] : cells_) f(k, v);
    }

    bool empty() const { return cells_.empty(); }

private:
    struct Hash {
        std::size_t operator()(const Key& k) const {
            return std::hash<std::int64_t>()(k.x * 0x9E3779B97F4A7C15LL ^ k.y);
        }
    };
    std::unordered_map<Key, std::vector<int>, Hash> cells_;
};

}  // namespace hopspan::detail
