#include "sects/clan.hpp"
#include "sects/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace sects {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

int parse_label(std::string_view digits, std::string_view context) {
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw Error(ErrorCode::BadToken, "bad pair label '" + std::string(context) + "'");
    const int label = std::stoi(std::string(digits));
    if (label <= 0)
        throw Error(ErrorCode::BadToken, "pair labels must be positive: '" + std::string(context) + "'");
    return label;
}

} // namespace

ClanSymbol parse_clan_symbol(std::string_view token) {
    if (token == "+")
        return ClanSymbol::plus();
    if (token == "-" || token == kUnicodeMinus)
        return ClanSymbol::minus();
    if (token.size() >= 2 && token.front() == '[' && token.back() == ']')
        return ClanSymbol::pair(parse_label(token.substr(1, token.size() - 2), token));
    return ClanSymbol::pair(parse_label(token, token));
}

namespace {

// Adjacent form: every character is a symbol, except that "[k]" spells a
// multi-digit label.
std::vector<ClanSymbol> parse_adjacent(std::string_view text) {
    std::vector<ClanSymbol> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '+') {
            out.push_back(ClanSymbol::plus());
            ++i;
        } else if (c == '-') {
            out.push_back(ClanSymbol::minus());
            ++i;
        } else if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
            out.push_back(ClanSymbol::minus());
            i += kUnicodeMinus.size();
        } else if (c == '[') {
            const auto close = text.find(']', i);
            if (close == std::string_view::npos)
                throw Error(ErrorCode::BadToken, "unterminated '[' in clan text");
            out.push_back(ClanSymbol::pair(parse_label(text.substr(i + 1, close - i - 1),
                                                       text.substr(i, close - i + 1))));
            i = close + 1;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            out.push_back(ClanSymbol::pair(parse_label(text.substr(i, 1), text.substr(i, 1))));
            ++i;
        } else {
            throw Error(ErrorCode::BadToken, "unexpected character '" + std::string(1, c) +
                                                 "' in clan text");
        }
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return result;
}

std::uint64_t double_factorial_odd(int k) { // (2k-1)!!
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i)
        result *= static_cast<std::uint64_t>(2 * i - 1);
    return result;
}

struct EnumerationState {
    int p;
    int q;
    int n;
    std::vector<ClanSymbol> current;
    std::vector<int> open; // labels opened but not yet closed, ascending
    int plus = 0;
    int minus = 0;
    int pairs = 0;
    std::vector<Clan>* out;

    void recurse() {
        const int position = static_cast<int>(current.size());
        if (position == n) {
            if (open.empty() && plus + pairs == p && minus + pairs == q)
                out->push_back(canonicalize(current));
            return;
        }
        const int remaining = n - position;
        if (static_cast<int>(open.size()) > remaining)
            return;

        if (minus + pairs < q) {
            current.push_back(ClanSymbol::minus());
            ++minus;
            recurse();
            --minus;
            current.pop_back();
        }
        if (plus + pairs < p) {
            current.push_back(ClanSymbol::plus());
            ++plus;
            recurse();
            --plus;
            current.pop_back();
        }
        // Pair symbols in ascending label order: closing any open label, or
        // opening the next fresh label (larger than every open one).
        for (std::size_t k = 0; k < open.size(); ++k) {
            const int label = open[k];
            current.push_back(ClanSymbol::pair(label));
            open.erase(open.begin() + static_cast<std::ptrdiff_t>(k));
            recurse();
            open.insert(open.begin() + static_cast<std::ptrdiff_t>(k), label);
            current.pop_back();
        }
        if (plus + pairs < p && minus + pairs < q && remaining >= static_cast<int>(open.size()) + 2) {
            const int label = pairs + 1;
            current.push_back(ClanSymbol::pair(label));
            open.push_back(label);
            ++pairs;
            recurse();
            --pairs;
            open.pop_back();
            current.pop_back();
        }
    }
};

} // namespace

std::strong_ordering operator<=>(const Clan& a, const Clan& b) {
    const auto n = std::min(a.symbols_.size(), b.symbols_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.symbols_[i].order_key() <=> b.symbols_[i].order_key(); c != 0)
            return c;
    }
    return a.symbols_.size() <=> b.symbols_.size();
}

Clan canonicalize(const std::vector<ClanSymbol>& raw) {
    if (raw.empty())
        throw Error(ErrorCode::EmptyInput, "a clan needs at least one symbol");

    std::map<int, std::vector<int>> occurrences;
    for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
        const auto& s = raw[static_cast<std::size_t>(i)];
        if (s.is_pair()) {
            if (s.label <= 0)
                throw Error(ErrorCode::BadToken, "pair labels must be positive");
            occurrences[s.label].push_back(i);
        }
    }
    for (const auto& [label, where] : occurrences) {
        if (where.size() != 2)
            throw Error(ErrorCode::UnmatchedPair, "label " + std::to_string(label) + " occurs " +
                                                      std::to_string(where.size()) +
                                                      " times; pair labels occur exactly twice");
    }

    Clan clan;
    clan.symbols_.reserve(raw.size());
    clan.mates_.assign(raw.size(), -1);
    std::map<int, int> relabel;
    int plus = 0;
    int minus = 0;
    for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
        const auto& s = raw[static_cast<std::size_t>(i)];
        switch (s.kind) {
        case SymbolKind::Plus:
            ++plus;
            clan.symbols_.push_back(s);
            break;
        case SymbolKind::Minus:
            ++minus;
            clan.symbols_.push_back(s);
            break;
        case SymbolKind::Pair: {
            auto [it, fresh] = relabel.try_emplace(s.label, static_cast<int>(relabel.size()) + 1);
            clan.symbols_.push_back(ClanSymbol::pair(it->second));
            const auto& where = occurrences[s.label];
            clan.mates_[static_cast<std::size_t>(i)] = where[0] == i ? where[1] : where[0];
            break;
        }
        }
    }
    clan.pairs_ = static_cast<int>(relabel.size());
    clan.p_ = plus + clan.pairs_;
    clan.q_ = minus + clan.pairs_;
    return clan;
}

Clan parse_clan(std::string_view text) {
    text = trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = trim(text.substr(1, text.size() - 2));
    if (text.empty())
        throw Error(ErrorCode::EmptyInput, "empty clan text");

    const bool delimited = std::any_of(text.begin(), text.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c));
    });
    if (!delimited)
        return canonicalize(parse_adjacent(text));

    std::vector<ClanSymbol> symbols;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        if (j > i)
            symbols.push_back(parse_clan_symbol(text.substr(i, j - i)));
        i = j;
    }
    return canonicalize(symbols);
}

std::string render_symbol(const ClanSymbol& symbol, bool bracket_labels) {
    switch (symbol.kind) {
    case SymbolKind::Plus: return "+";
    case SymbolKind::Minus: return "-";
    case SymbolKind::Pair:
        return bracket_labels ? "[" + std::to_string(symbol.label) + "]" : std::to_string(symbol.label);
    }
    return {};
}

std::string render(const Clan& clan) {
    const bool bracket = clan.size() >= 10;
    std::string out;
    for (const auto& s : clan.symbols())
        out += render_symbol(s, bracket);
    return out;
}

std::uint64_t clan_count(int p, int q) {
    if (p < 0 || q < 0)
        return 0;
    const int n = p + q;
    std::uint64_t total = 0;
    for (int k = 0; k <= std::min(p, q); ++k)
        total += binomial(n, 2 * k) * double_factorial_odd(k) * binomial(n - 2 * k, p - k);
    return total;
}

std::vector<Clan> enumerate_clans(int p, int q, int limit_n) {
    if (p < 1 || q < 1)
        throw Error(ErrorCode::InvalidArgument, "enumerate_clans needs p >= 1 and q >= 1");
    if (p + q > limit_n)
        throw Error(ErrorCode::LimitExceeded, "p + q = " + std::to_string(p + q) +
                                                  " exceeds the enumeration limit " +
                                                  std::to_string(limit_n));
    std::vector<Clan> out;
    out.reserve(static_cast<std::size_t>(clan_count(p, q)));
    EnumerationState state{p, q, p + q, {}, {}, 0, 0, 0, &out};
    state.recurse();
    return out;
}

std::vector<Signature> default_signature_word(const Clan& clan) {
    std::vector<Signature> word(static_cast<std::size_t>(clan.size()));
    for (int i = 0; i < clan.size(); ++i) {
        const auto& s = clan[i];
        Signature sig = Signature::Plus;
        if (s.kind == SymbolKind::Minus)
            sig = Signature::Minus;
        else if (s.is_pair())
            sig = i < clan.mate(i) ? Signature::Minus : Signature::Plus;
        word[static_cast<std::size_t>(i)] = sig;
    }
    return word;
}

SignedClan default_signed_clan(const Clan& clan) {
    SignedClan signed_clan{clan, std::vector<std::optional<Signature>>(static_cast<std::size_t>(clan.size()))};
    const auto word = default_signature_word(clan);
    for (int i = 0; i < clan.size(); ++i) {
        if (clan[i].is_pair())
            signed_clan.signatures[static_cast<std::size_t>(i)] = word[static_cast<std::size_t>(i)];
    }
    return signed_clan;
}

Clan base_clan(const Clan& clan) {
    std::vector<ClanSymbol> symbols;
    symbols.reserve(static_cast<std::size_t>(clan.size()));
    for (const auto sig : default_signature_word(clan))
        symbols.push_back(sig == Signature::Plus ? ClanSymbol::plus() : ClanSymbol::minus());
    return canonicalize(symbols);
}

ClanStatistics clan_statistics(const Clan& clan) {
    const int n = clan.size();
    ClanStatistics stats;
    stats.plus_counts.resize(static_cast<std::size_t>(n));
    stats.minus_counts.resize(static_cast<std::size_t>(n));
    stats.pair_counts = IntMatrix::Zero(n, n);

    int plus = 0;
    int minus = 0;
    for (int i = 0; i < n; ++i) {
        const auto& s = clan[i];
        if (s.kind == SymbolKind::Plus) {
            ++plus;
        } else if (s.kind == SymbolKind::Minus) {
            ++minus;
        } else if (clan.mate(i) < i) {
            // second member: the pair is now complete and counts for both signs
            ++plus;
            ++minus;
        }
        stats.plus_counts[static_cast<std::size_t>(i)] = plus;
        stats.minus_counts[static_cast<std::size_t>(i)] = minus;
    }

    // A pair at s < t straddles the window (i, j) when s <= i < j < t.
    for (int s = 0; s < n; ++s) {
        const int t = clan.mate(s);
        if (!clan[s].is_pair() || t < s)
            continue;
        for (int i = s; i < t; ++i) {
            for (int j = i + 1; j < t; ++j)
                stats.pair_counts(i, j) += 1;
        }
    }
    return stats;
}

Involution default_permutation(const Clan& clan) {
    const int n = clan.size();
    const int p = clan.p();
    const auto word = default_signature_word(clan);

    std::vector<int> s_positions;
    std::vector<int> t_positions;
    for (int i = 1; i <= n; ++i) {
        const auto sig = word[static_cast<std::size_t>(i - 1)];
        if (i <= p && sig == Signature::Minus)
            s_positions.push_back(i);
        else if (i > p && sig == Signature::Plus)
            t_positions.push_back(i);
    }
    if (s_positions.size() != t_positions.size())
        throw Error(ErrorCode::InternalMismatch, "default permutation: |S| = " +
                                                     std::to_string(s_positions.size()) + " but |T| = " +
                                                     std::to_string(t_positions.size()));

    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t l = 0; l < s_positions.size(); ++l) {
        images[static_cast<std::size_t>(s_positions[l] - 1)] = t_positions[l];
        images[static_cast<std::size_t>(t_positions[l] - 1)] = s_positions[l];
    }
    return Involution(std::move(images));
}

IntegerMatrix default_flag_matrix(const Clan& clan) {
    const int n = clan.size();
    const auto sigma = default_permutation(clan);
    const auto word = default_signature_word(clan);

    IntegerMatrix result{IntMatrix::Zero(n, n), 0};
    for (int i = 0; i < n; ++i) {
        const int row = sigma(i + 1) - 1;
        if (!clan[i].is_pair()) {
            result.entries(row, i) = 1;
            continue;
        }
        const int mate_row = sigma(clan.mate(i) + 1) - 1;
        result.entries(row, i) = word[static_cast<std::size_t>(i)] == Signature::Plus ? 1 : -1;
        result.entries(mate_row, i) += 1;
    }
    result.det_meta = exact_determinant(result.entries);
    return result;
}

Involution underlying_involution(const Clan& clan) {
    std::vector<int> images(static_cast<std::size_t>(clan.size()));
    for (int i = 0; i < clan.size(); ++i)
        images[static_cast<std::size_t>(i)] = (clan[i].is_pair() ? clan.mate(i) : i) + 1;
    return Involution(std::move(images));
}

} // namespace sects
