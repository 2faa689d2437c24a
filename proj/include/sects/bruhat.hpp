#pragma once

#include "sects/clan.hpp"
#include "sects/poset.hpp"

#include <vector>

namespace sects {

/// Bruhat order on C(p,q): gamma <= tau iff gamma(i;+) >= tau(i;+),
/// gamma(i;-) >= tau(i;-) for all i and gamma(i,j) <= tau(i,j) for all i < j.
bool wyser_leq(const Clan& gamma, const Clan& tau);
bool wyser_leq(const ClanStatistics& gamma, const ClanStatistics& tau);

/// Same order, with the window counts replaced by comparing underlying
/// involutions in the southwest rank-control order.
bool leq_via_involution(const Clan& gamma, const Clan& tau);

/// Bruhat poset on a set of clans sharing (p,q); elements are kept in
/// enumeration order and keyed by their rendered form.
Poset build_poset(std::vector<Clan> elements);

/// (c_1 ... c_n) -> (+^(p2-p) c_1 ... c_n -^(q2-q)).
Clan embed_clan(const Clan& gamma, int p2, int q2);

} // namespace sects
