#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sects {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    Bitset& operator|=(const Bitset& other) {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] |= other.words_[w];
        return *this;
    }
    Bitset& subtract(const Bitset& other) {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= ~other.words_[w];
        return *this;
    }

    template <typename F>
    void for_each(F&& visit) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto word = words_[w];
            while (word != 0) {
                const auto bit = static_cast<std::size_t>(__builtin_ctzll(word));
                visit(w * 64 + bit);
                word &= word - 1;
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

using Cover = std::pair<std::size_t, std::size_t>;

/// Finite poset over string keys: the full order relation as bit rows plus the
/// Hasse diagram (lower, upper) cover pairs.
class Poset {
public:
    Poset() = default;

    /// `leq(i, j)` must define a partial order on the indices of `keys`.
    template <typename Leq>
    static Poset from_relation(std::vector<std::string> keys, Leq&& leq) {
        const std::size_t n = keys.size();
        std::vector<Bitset> up(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || leq(i, j))
                    up[i].set(j);
            }
        }
        return Poset(std::move(keys), std::move(up));
    }

    std::size_t size() const { return keys_.size(); }
    bool empty() const { return keys_.empty(); }
    const std::vector<std::string>& keys() const { return keys_; }
    const std::string& key(std::size_t i) const { return keys_[i]; }
    std::optional<std::size_t> index_of(const std::string& key) const;

    bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool less(std::size_t a, std::size_t b) const { return a != b && up_[a].test(b); }
    const Bitset& up_set(std::size_t a) const { return up_[a]; }

    /// Cover pairs sorted by (lower, upper).
    const std::vector<Cover>& covers() const { return covers_; }

    /// Induced subposet on the given indices, in the given order.
    Poset restrict(const std::vector<std::size_t>& indices) const;

    bool is_reflexive() const;
    bool is_antisymmetric() const;
    bool is_transitive() const;
    bool is_partial_order() const { return is_reflexive() && is_antisymmetric() && is_transitive(); }

private:
    Poset(std::vector<std::string> keys, std::vector<Bitset> up);

    std::vector<std::string> keys_;
    std::vector<Bitset> up_;
    std::vector<Cover> covers_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct Extrema {
    std::vector<std::size_t> minimals;
    std::vector<std::size_t> maximals;
};

Extrema extremal_elements(const Poset& poset);

/// True when every maximal chain has the same length.
bool is_graded(const Poset& poset);

/// Length of the longest chain ending at each element (minimal elements get 0).
std::vector<int> height_function(const Poset& poset);

} // namespace sects
