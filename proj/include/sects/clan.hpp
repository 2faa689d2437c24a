#pragma once

#include "sects/linalg.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sects {

inline constexpr int kDefaultLimitN = 12;

enum class SymbolKind : std::uint8_t { Minus, Plus, Pair };

struct ClanSymbol {
    SymbolKind kind = SymbolKind::Plus;
    int label = 0; // positive iff kind == Pair

    static constexpr ClanSymbol plus() { return {SymbolKind::Plus, 0}; }
    static constexpr ClanSymbol minus() { return {SymbolKind::Minus, 0}; }
    static constexpr ClanSymbol pair(int label) { return {SymbolKind::Pair, label}; }

    constexpr bool is_pair() const { return kind == SymbolKind::Pair; }

    // Enumeration order: - < + < 1 < 2 < ...
    constexpr int order_key() const {
        switch (kind) {
        case SymbolKind::Minus: return 0;
        case SymbolKind::Plus: return 1;
        case SymbolKind::Pair: return 1 + label;
        }
        return 0;
    }

    friend constexpr bool operator==(ClanSymbol, ClanSymbol) = default;
};

enum class Signature : std::uint8_t { Minus, Plus };

/// A (p,q)-clan in canonical form: pair labels are 1, 2, ... in order of first
/// occurrence. Instances can only be obtained through canonicalize (or the
/// functions built on it), so every Clan satisfies the clan invariants.
class Clan {
public:
    const std::vector<ClanSymbol>& symbols() const { return symbols_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int size() const { return static_cast<int>(symbols_.size()); }
    const ClanSymbol& operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }

    int pair_count() const { return pairs_; }
    bool is_base() const { return pairs_ == 0; }

    /// Position (0-based) of the other member of the pair at position i.
    int mate(int i) const { return mates_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Clan& a, const Clan& b) { return a.symbols_ == b.symbols_; }
    friend std::strong_ordering operator<=>(const Clan& a, const Clan& b);

private:
    friend Clan canonicalize(const std::vector<ClanSymbol>& raw);

    std::vector<ClanSymbol> symbols_;
    std::vector<int> mates_;
    int p_ = 0;
    int q_ = 0;
    int pairs_ = 0;
};

/// A clan with a signature on each pair member; entries at ± positions are empty.
struct SignedClan {
    Clan clan;
    std::vector<std::optional<Signature>> signatures;
};

/// Self-inverse permutation of {1..n}, stored in one-line notation.
class Involution {
public:
    Involution() = default;
    explicit Involution(std::vector<int> images);

    static Involution identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    /// 1-based image of the 1-based point i.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    std::string one_line() const;
    /// Cycle notation of the 2-cycles, e.g. "(2 4)(3 5)"; "()" for the identity.
    std::string cycles() const;
    /// Permutation matrix with a 1 at (i, sigma(i)); symmetric for involutions.
    IntMatrix matrix() const;

    friend bool operator==(const Involution&, const Involution&) = default;

private:
    std::vector<int> images_;
};

/// Unnormalized default matrix together with its integer determinant.
struct IntegerMatrix {
    IntMatrix entries;
    std::int64_t det_meta = 0;
};

struct ClanStatistics {
    std::vector<int> plus_counts;  // gamma(i;+), i = 1..n at index i-1
    std::vector<int> minus_counts; // gamma(i;-)
    IntMatrix pair_counts;         // gamma(i,j) at (i-1, j-1) for i < j, zero elsewhere

    int window(int i, int j) const { return static_cast<int>(pair_counts(i - 1, j - 1)); }
};

Clan canonicalize(const std::vector<ClanSymbol>& raw);
Clan parse_clan(std::string_view text);
/// One token: "+", "-", a positive integer or a bracketed positive integer.
ClanSymbol parse_clan_symbol(std::string_view token);
std::string render(const Clan& clan);
/// Rendering of a single symbol as used in the JSON "symbols" array.
std::string render_symbol(const ClanSymbol& symbol, bool bracket_labels);

/// Closed-form |C(p,q)| = sum_k C(n,2k) (2k-1)!! C(n-2k, p-k).
std::uint64_t clan_count(int p, int q);
std::vector<Clan> enumerate_clans(int p, int q, int limit_n = kDefaultLimitN);

SignedClan default_signed_clan(const Clan& clan);
Clan base_clan(const Clan& clan);
ClanStatistics clan_statistics(const Clan& clan);
Involution default_permutation(const Clan& clan);
IntegerMatrix default_flag_matrix(const Clan& clan);
Involution underlying_involution(const Clan& clan);

/// Signature of every position of the default signed clan, with the ± symbols
/// carrying their own sign.
std::vector<Signature> default_signature_word(const Clan& clan);

} // namespace sects
