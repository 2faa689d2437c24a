#include "sects/poset.hpp"

#include <algorithm>
#include <limits>

namespace sects {

Poset::Poset(std::vector<std::string> keys, std::vector<Bitset> up)
    : keys_(std::move(keys)), up_(std::move(up)) {
    const std::size_t n = keys_.size();
    index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        index_.emplace(keys_[i], i);

    // covers(a) = strict_up(a) minus everything strictly above a strict upper bound
    for (std::size_t a = 0; a < n; ++a) {
        Bitset strict = up_[a];
        strict.reset(a);
        Bitset shadowed(n);
        strict.for_each([&](std::size_t c) {
            Bitset above = up_[c];
            above.reset(c);
            shadowed |= above;
        });
        strict.subtract(shadowed);
        strict.for_each([&](std::size_t b) { covers_.emplace_back(a, b); });
    }
}

std::optional<std::size_t> Poset::index_of(const std::string& key) const {
    if (auto it = index_.find(key); it != index_.end())
        return it->second;
    return std::nullopt;
}

Poset Poset::restrict(const std::vector<std::size_t>& indices) const {
    std::vector<std::string> keys;
    keys.reserve(indices.size());
    for (auto i : indices)
        keys.push_back(keys_[i]);
    return from_relation(std::move(keys),
                         [&](std::size_t a, std::size_t b) { return leq(indices[a], indices[b]); });
}

bool Poset::is_reflexive() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (!leq(i, i))
            return false;
    }
    return true;
}

bool Poset::is_antisymmetric() const {
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (leq(i, j) && leq(j, i))
                return false;
        }
    }
    return true;
}

bool Poset::is_transitive() const {
    for (std::size_t a = 0; a < size(); ++a) {
        bool ok = true;
        up_[a].for_each([&](std::size_t b) {
            up_[b].for_each([&](std::size_t c) {
                if (!leq(a, c))
                    ok = false;
            });
        });
        if (!ok)
            return false;
    }
    return true;
}

Extrema extremal_elements(const Poset& poset) {
    Extrema result;
    const std::size_t n = poset.size();
    for (std::size_t a = 0; a < n; ++a) {
        bool minimal = true;
        bool maximal = true;
        for (std::size_t b = 0; b < n && (minimal || maximal); ++b) {
            if (poset.less(b, a))
                minimal = false;
            if (poset.less(a, b))
                maximal = false;
        }
        if (minimal)
            result.minimals.push_back(a);
        if (maximal)
            result.maximals.push_back(a);
    }
    return result;
}

namespace {

// Indices sorted so that every element comes after everything below it.
std::vector<std::size_t> linear_extension(const Poset& poset) {
    std::vector<std::size_t> order(poset.size());
    std::vector<std::size_t> below(poset.size(), 0);
    for (std::size_t a = 0; a < poset.size(); ++a) {
        order[a] = a;
        for (std::size_t b = 0; b < poset.size(); ++b)
            below[a] += poset.less(b, a) ? 1 : 0;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
    return order;
}

} // namespace

std::vector<int> height_function(const Poset& poset) {
    std::vector<int> height(poset.size(), 0);
    std::vector<std::vector<std::size_t>> lower_covers(poset.size());
    for (const auto& [lo, hi] : poset.covers())
        lower_covers[hi].push_back(lo);
    for (auto x : linear_extension(poset)) {
        for (auto lo : lower_covers[x])
            height[x] = std::max(height[x], height[lo] + 1);
    }
    return height;
}

bool is_graded(const Poset& poset) {
    if (poset.empty())
        return true;
    constexpr int kUnset = std::numeric_limits<int>::max();
    std::vector<int> shortest(poset.size(), kUnset);
    std::vector<int> longest(poset.size(), 0);
    std::vector<std::vector<std::size_t>> lower_covers(poset.size());
    for (const auto& [lo, hi] : poset.covers())
        lower_covers[hi].push_back(lo);

    for (auto x : linear_extension(poset)) {
        if (lower_covers[x].empty()) {
            shortest[x] = 0;
            continue;
        }
        for (auto lo : lower_covers[x]) {
            shortest[x] = std::min(shortest[x], shortest[lo] + 1);
            longest[x] = std::max(longest[x], longest[lo] + 1);
        }
    }
    std::optional<int> top_rank;
    for (std::size_t x = 0; x < poset.size(); ++x) {
        if (shortest[x] != longest[x])
            return false;
    }
    for (auto x : extremal_elements(poset).maximals) {
        if (top_rank && *top_rank != longest[x])
            return false;
        top_rank = longest[x];
    }
    return true;
}

} // namespace sects
