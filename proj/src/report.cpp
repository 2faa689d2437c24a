#include "sects/report.hpp"
#include "sects/error.hpp"

#include <array>
#include <sstream>

namespace sects {

Json clan_to_json(const Clan& clan) {
    const bool bracket = clan.size() >= 10;
    Json symbols = Json::array();
    for (const auto& s : clan.symbols())
        symbols.push_back(render_symbol(s, bracket));
    return Json{{"symbols", symbols}, {"p", clan.p()}, {"q", clan.q()}};
}

Clan clan_from_json(const Json& j) {
    std::vector<ClanSymbol> raw;
    for (const auto& item : j.at("symbols"))
        raw.push_back(parse_clan_symbol(item.get<std::string>()));
    auto clan = canonicalize(raw);
    if (j.contains("p") && j.contains("q") &&
        (j.at("p").get<int>() != clan.p() || j.at("q").get<int>() != clan.q()))
        throw Error(ErrorCode::ShapeMismatch, "declared (p,q) does not match the symbols");
    return clan;
}

Json poset_to_json(const Poset& poset) {
    Json covers = Json::array();
    for (const auto& [lo, hi] : poset.covers())
        covers.push_back(Json::array({lo, hi}));
    return Json{{"elements", poset.keys()}, {"covers", covers}};
}

Json sect_to_json(const Sect& sect) {
    Json members = Json::array();
    for (const auto& clan : sect.members)
        members.push_back(render(clan));
    const auto path = lattice_path(sect.subset, sect.subset.n());
    return Json{{"I", sect.subset.indices()},
                {"base", render(sect.base)},
                {"path", render(path)},
                {"dimension", cell_dimension(path)},
                {"members", members}};
}

Json rook_to_json(const RookMatrix& rook) { return Json(rook.rows()); }

Json iso_report_to_json(const IsoReport& report) {
    Json counterexamples = Json::array();
    for (const auto& [lower, upper] : report.counterexamples)
        counterexamples.push_back(Json::array({render(lower), render(upper)}));
    return Json{{"p", report.p},
                {"bijective", report.bijective},
                {"order_preserving", report.order_preserving},
                {"order_reflecting", report.order_reflecting},
                {"dense_size", report.dense_size},
                {"rook_count", report.rook_count},
                {"counterexamples", counterexamples}};
}

std::string sect_color(std::size_t colex_rank) {
    static constexpr std::array<const char*, 12> kPalette = {
        "#d62728", "#ff7f0e", "#e377c2", "#1f77b4", "#9467bd", "#17becf",
        "#2ca02c", "#8c564b", "#bcbd22", "#7f7f7f", "#393b79", "#637939",
    };
    return kPalette[colex_rank % kPalette.size()];
}

namespace {

std::string quoted(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string hasse_dot(const Poset& poset, const std::string& graph_name,
                      const std::optional<std::vector<std::string>>& node_colors) {
    std::ostringstream out;
    out << "digraph " << quoted(graph_name) << " {\n";
    out << "  rankdir=BT;\n";
    if (node_colors)
        out << "  node [shape=ellipse, style=filled, fontcolor=white];\n";
    else
        out << "  node [shape=ellipse];\n";
    for (std::size_t i = 0; i < poset.size(); ++i) {
        out << "  n" << i << " [label=" << quoted(poset.key(i));
        if (node_colors)
            out << ", fillcolor=" << quoted((*node_colors)[i]);
        out << "];\n";
    }
    for (const auto& [lo, hi] : poset.covers())
        out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace sects
