#pragma once

#include "sects/clan.hpp"
#include "sects/poset.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sects {

/// A p-subset I of {1..n}, naming the Schubert cell C_I of Gr(p,n).
class BasisSubset {
public:
    BasisSubset() = default;
    BasisSubset(std::vector<int> indices, int n);

    const std::vector<int>& indices() const { return indices_; }
    int n() const { return n_; }
    int p() const { return static_cast<int>(indices_.size()); }
    bool contains(int i) const;

    friend bool operator==(const BasisSubset&, const BasisSubset&) = default;
    /// Colexicographic: compare largest elements first.
    friend bool operator<(const BasisSubset& a, const BasisSubset& b);

private:
    std::vector<int> indices_;
    int n_ = 0;
};

enum class Step : char { N = 'N', E = 'E' };

struct LatticePath {
    std::vector<Step> steps;

    int east() const;
    int north() const;
    /// 1-based positions of the E steps, ascending.
    std::vector<int> east_positions() const;

    static LatticePath parse(std::string_view word);
    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

std::string render(const LatticePath& path);

struct Sect {
    BasisSubset subset;
    Clan base;
    std::vector<Clan> members; // enumeration order
};

struct DenseSect {
    Sect sect;
    Clan min;
    Clan max;
    int r = 0;
};

Clan base_clan_of_subset(const BasisSubset& subset, int n);
BasisSubset subset_of_base_clan(const Clan& base);
LatticePath lattice_path(const BasisSubset& subset, int n);

/// The k-th E step of a comes no later than the k-th E step of b.
bool path_leq(const LatticePath& a, const LatticePath& b);

/// Boxes of the p x q grid beneath the path: sum over E steps of the N steps before it.
int cell_dimension(const LatticePath& path);

/// Sects of C(p,q) keyed by subset, in colex order of the subset.
std::map<BasisSubset, Sect> sect_partition(int p, int q, int limit_n = kDefaultLimitN);

/// (1 2 ... r +^(p-q) r ... 2 1) with r = q.
Clan gamma_max(int p, int q);

DenseSect dense_sect(int p, int q, int limit_n = kDefaultLimitN);

bool is_upper_order_ideal(const std::vector<Clan>& subset, const Poset& poset);

BasisSubset sect_of_clan(const Clan& gamma);

} // namespace sects
