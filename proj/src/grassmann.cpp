#include "sects/grassmann.hpp"
#include "sects/error.hpp"

#include <algorithm>

namespace sects {

BasisSubset::BasisSubset(std::vector<int> indices, int n) : indices_(std::move(indices)), n_(n) {
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        const int i = indices_[k];
        if (i < 1 || i > n)
            throw Error(ErrorCode::InvalidArgument,
                        "index " + std::to_string(i) + " is outside 1.." + std::to_string(n));
        if (k > 0 && indices_[k - 1] >= i)
            throw Error(ErrorCode::InvalidArgument, "subset indices must be strictly increasing");
    }
}

bool BasisSubset::contains(int i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool operator<(const BasisSubset& a, const BasisSubset& b) {
    if (a.n_ != b.n_)
        return a.n_ < b.n_;
    return std::lexicographical_compare(a.indices_.rbegin(), a.indices_.rend(), b.indices_.rbegin(),
                                        b.indices_.rend());
}

int LatticePath::east() const {
    return static_cast<int>(std::count(steps.begin(), steps.end(), Step::E));
}

int LatticePath::north() const {
    return static_cast<int>(std::count(steps.begin(), steps.end(), Step::N));
}

std::vector<int> LatticePath::east_positions() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::E)
            out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

LatticePath LatticePath::parse(std::string_view word) {
    LatticePath path;
    for (char c : word) {
        if (c == 'N')
            path.steps.push_back(Step::N);
        else if (c == 'E')
            path.steps.push_back(Step::E);
        else
            throw Error(ErrorCode::BadToken, "lattice paths are words over N and E");
    }
    return path;
}

std::string render(const LatticePath& path) {
    std::string out;
    out.reserve(path.steps.size());
    for (auto s : path.steps)
        out += static_cast<char>(s);
    return out;
}

Clan base_clan_of_subset(const BasisSubset& subset, int n) {
    if (subset.n() != n)
        throw Error(ErrorCode::ShapeMismatch, "subset was built for a different n");
    std::vector<ClanSymbol> symbols;
    for (int i = 1; i <= n; ++i)
        symbols.push_back(subset.contains(i) ? ClanSymbol::plus() : ClanSymbol::minus());
    return canonicalize(symbols);
}

BasisSubset subset_of_base_clan(const Clan& base) {
    if (!base.is_base())
        throw Error(ErrorCode::NotABaseClan, render(base) + " contains pairs");
    std::vector<int> indices;
    for (int i = 0; i < base.size(); ++i) {
        if (base[i].kind == SymbolKind::Plus)
            indices.push_back(i + 1);
    }
    return BasisSubset(std::move(indices), base.size());
}

LatticePath lattice_path(const BasisSubset& subset, int n) {
    if (subset.n() != n)
        throw Error(ErrorCode::ShapeMismatch, "subset was built for a different n");
    LatticePath path;
    for (int i = 1; i <= n; ++i)
        path.steps.push_back(subset.contains(i) ? Step::E : Step::N);
    return path;
}

bool path_leq(const LatticePath& a, const LatticePath& b) {
    if (a.east() != b.east() || a.north() != b.north())
        throw Error(ErrorCode::ShapeMismatch, "paths end at different grid corners");
    const auto ea = a.east_positions();
    const auto eb = b.east_positions();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        if (ea[k] > eb[k])
            return false;
    }
    return true;
}

int cell_dimension(const LatticePath& path) {
    int north_so_far = 0;
    int boxes = 0;
    for (auto s : path.steps) {
        if (s == Step::N)
            ++north_so_far;
        else
            boxes += north_so_far;
    }
    return boxes;
}

std::map<BasisSubset, Sect> sect_partition(int p, int q, int limit_n) {
    std::map<BasisSubset, Sect> sects;
    for (auto& clan : enumerate_clans(p, q, limit_n)) {
        auto base = base_clan(clan);
        auto subset = subset_of_base_clan(base);
        auto [it, fresh] = sects.try_emplace(subset, Sect{subset, base, {}});
        it->second.members.push_back(std::move(clan));
    }
    return sects;
}

Clan gamma_max(int p, int q) {
    if (p < q)
        throw Error(ErrorCode::RequiresPGeQ, "the big sect is defined for p >= q");
    const int r = q; // (n - (p - q)) / 2
    std::vector<ClanSymbol> symbols;
    for (int k = 1; k <= r; ++k)
        symbols.push_back(ClanSymbol::pair(k));
    for (int k = 0; k < p - q; ++k)
        symbols.push_back(ClanSymbol::plus());
    for (int k = r; k >= 1; --k)
        symbols.push_back(ClanSymbol::pair(k));
    return canonicalize(symbols);
}

DenseSect dense_sect(int p, int q, int limit_n) {
    if (p < q)
        throw Error(ErrorCode::RequiresPGeQ,
                    "dense_sect(" + std::to_string(p) + "," + std::to_string(q) + ") requires p >= q");
    std::vector<int> indices;
    for (int i = q + 1; i <= p + q; ++i)
        indices.push_back(i);
    BasisSubset subset(std::move(indices), p + q);
    Clan base = base_clan_of_subset(subset, p + q);

    Sect sect{subset, base, {}};
    for (auto& clan : enumerate_clans(p, q, limit_n)) {
        if (base_clan(clan) == base)
            sect.members.push_back(std::move(clan));
    }
    return DenseSect{std::move(sect), base, gamma_max(p, q), (p + q - (p - q)) / 2};
}

bool is_upper_order_ideal(const std::vector<Clan>& subset, const Poset& poset) {
    Bitset inside(poset.size());
    for (const auto& clan : subset) {
        const auto index = poset.index_of(render(clan));
        if (!index)
            throw Error(ErrorCode::UnknownElement, render(clan) + " is not an element of the poset");
        inside.set(*index);
    }
    for (std::size_t x = 0; x < poset.size(); ++x) {
        if (!inside.test(x))
            continue;
        Bitset escape = poset.up_set(x);
        escape.subtract(inside);
        bool escaped = false;
        escape.for_each([&](std::size_t) { escaped = true; });
        if (escaped)
            return false;
    }
    return true;
}

BasisSubset sect_of_clan(const Clan& gamma) { return subset_of_base_clan(base_clan(gamma)); }

} // namespace sects
