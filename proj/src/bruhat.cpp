#include "sects/bruhat.hpp"
#include "sects/error.hpp"
#include "sects/rook.hpp"

#include <algorithm>

namespace sects {

namespace {

void require_same_shape(const Clan& gamma, const Clan& tau) {
    if (gamma.p() != tau.p() || gamma.q() != tau.q())
        throw Error(ErrorCode::ShapeMismatch, "clans " + render(gamma) + " and " + render(tau) +
                                                  " have different (p,q)");
}

bool sign_counts_dominate(const ClanStatistics& gamma, const ClanStatistics& tau) {
    for (std::size_t i = 0; i < gamma.plus_counts.size(); ++i) {
        if (gamma.plus_counts[i] < tau.plus_counts[i] || gamma.minus_counts[i] < tau.minus_counts[i])
            return false;
    }
    return true;
}

} // namespace

bool wyser_leq(const ClanStatistics& gamma, const ClanStatistics& tau) {
    return sign_counts_dominate(gamma, tau) && (gamma.pair_counts.array() <= tau.pair_counts.array()).all();
}

bool wyser_leq(const Clan& gamma, const Clan& tau) {
    require_same_shape(gamma, tau);
    return wyser_leq(clan_statistics(gamma), clan_statistics(tau));
}

bool leq_via_involution(const Clan& gamma, const Clan& tau) {
    require_same_shape(gamma, tau);
    return sign_counts_dominate(clan_statistics(gamma), clan_statistics(tau)) &&
           involution_leq(underlying_involution(gamma), underlying_involution(tau));
}

Poset build_poset(std::vector<Clan> elements) {
    for (const auto& clan : elements) {
        if (clan.p() != elements.front().p() || clan.q() != elements.front().q())
            throw Error(ErrorCode::ShapeMismatch, "build_poset needs clans of a single (p,q)");
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    std::vector<std::string> keys;
    std::vector<ClanStatistics> stats;
    keys.reserve(elements.size());
    stats.reserve(elements.size());
    for (const auto& clan : elements) {
        keys.push_back(render(clan));
        stats.push_back(clan_statistics(clan));
    }
    return Poset::from_relation(std::move(keys), [&](std::size_t a, std::size_t b) {
        return wyser_leq(stats[a], stats[b]);
    });
}

Clan embed_clan(const Clan& gamma, int p2, int q2) {
    if (p2 < gamma.p() || q2 < gamma.q())
        throw Error(ErrorCode::ShrinkNotAllowed, "cannot embed a (" + std::to_string(gamma.p()) + "," +
                                                     std::to_string(gamma.q()) + ")-clan into (" +
                                                     std::to_string(p2) + "," + std::to_string(q2) + ")");
    std::vector<ClanSymbol> symbols(static_cast<std::size_t>(p2 - gamma.p()), ClanSymbol::plus());
    symbols.insert(symbols.end(), gamma.symbols().begin(), gamma.symbols().end());
    symbols.insert(symbols.end(), static_cast<std::size_t>(q2 - gamma.q()), ClanSymbol::minus());
    return canonicalize(symbols);
}

} // namespace sects
