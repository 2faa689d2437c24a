#pragma once

#include "sects/clan.hpp"
#include "sects/grassmann.hpp"
#include "sects/poset.hpp"
#include "sects/rook.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace sects {

using Json = nlohmann::ordered_json;

Json clan_to_json(const Clan& clan);
Clan clan_from_json(const Json& j);

Json poset_to_json(const Poset& poset);
Json sect_to_json(const Sect& sect);
Json rook_to_json(const RookMatrix& rook);
Json iso_report_to_json(const IsoReport& report);

/// Fill color of the sect with the given colex rank (12-color cycle).
std::string sect_color(std::size_t colex_rank);

/// Hasse diagram as a DOT digraph, edges drawn from lower to upper cover.
/// When `node_colors` is given it maps each element index to a fill color.
std::string hasse_dot(const Poset& poset, const std::string& graph_name,
                      const std::optional<std::vector<std::string>>& node_colors = std::nullopt);

} // namespace sects
