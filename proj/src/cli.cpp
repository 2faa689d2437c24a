#include "sects/cli.hpp"
#include "sects/bruhat.hpp"
#include "sects/delannoy.hpp"
#include "sects/error.hpp"
#include "sects/grassmann.hpp"
#include "sects/report.hpp"
#include "sects/rook.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace sects::cli {

namespace {

constexpr int kExitError = 2;
constexpr int kExitCheckFailed = 1;

void require_limit(const RunConfig& cfg) {
    if (cfg.p < 1 || cfg.q < 1)
        throw Error(ErrorCode::InvalidArgument, "p and q must be at least 1");
    if (cfg.p + cfg.q > cfg.limit_n)
        throw Error(ErrorCode::LimitExceeded, "p + q = " + std::to_string(cfg.p + cfg.q) +
                                                  " exceeds limit_n = " + std::to_string(cfg.limit_n));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string cmd_enumerate(const RunConfig& cfg) {
    require_limit(cfg);
    const auto clans = enumerate_clans(cfg.p, cfg.q, cfg.limit_n);
    if (cfg.output_format.value_or(OutputFormat::Text) == OutputFormat::Json) {
        Json list = Json::array();
        for (const auto& clan : clans)
            list.push_back(render(clan));
        return dump(Json{{"p", cfg.p}, {"q", cfg.q}, {"count", clans.size()}, {"clans", list}});
    }
    std::string out;
    for (const auto& clan : clans)
        out += render(clan) + "\n";
    return out;
}

std::string cmd_hasse(const RunConfig& cfg) {
    require_limit(cfg);
    const auto poset = build_poset(enumerate_clans(cfg.p, cfg.q, cfg.limit_n));
    if (cfg.output_format.value_or(OutputFormat::Dot) == OutputFormat::Json)
        return dump(poset_to_json(poset));

    std::optional<std::vector<std::string>> colors;
    if (cfg.color_by_sect) {
        const auto sects = sect_partition(cfg.p, cfg.q, cfg.limit_n);
        std::map<std::string, std::string> color_of;
        std::size_t rank = 0;
        for (const auto& [subset, sect] : sects) {
            for (const auto& member : sect.members)
                color_of[render(member)] = sect_color(rank);
            ++rank;
        }
        colors.emplace();
        for (const auto& key : poset.keys())
            colors->push_back(color_of.at(key));
    }
    const std::string name = "C(" + std::to_string(cfg.p) + "," + std::to_string(cfg.q) + ")";
    return hasse_dot(poset, name, colors);
}

std::string cmd_sects(const RunConfig& cfg) {
    require_limit(cfg);
    Json list = Json::array();
    for (const auto& [subset, sect] : sect_partition(cfg.p, cfg.q, cfg.limit_n))
        list.push_back(sect_to_json(sect));
    if (cfg.output_format.value_or(OutputFormat::Json) == OutputFormat::Text) {
        std::string out;
        for (const auto& s : list) {
            out += s["path"].get<std::string>() + " " + s["base"].get<std::string>() + ":";
            for (const auto& m : s["members"])
                out += " " + m.get<std::string>();
            out += "\n";
        }
        return out;
    }
    return dump(Json{{"p", cfg.p}, {"q", cfg.q}, {"sects", list}});
}

std::string cmd_dense(const RunConfig& cfg) {
    require_limit(cfg);
    const auto dense = dense_sect(cfg.p, cfg.q, cfg.limit_n);
    const auto poset = build_poset(enumerate_clans(cfg.p, cfg.q, cfg.limit_n));
    const bool ideal = is_upper_order_ideal(dense.sect.members, poset);
    Json members = Json::array();
    for (const auto& clan : dense.sect.members)
        members.push_back(render(clan));
    const Json report{{"p", cfg.p},
                      {"q", cfg.q},
                      {"r", dense.r},
                      {"I", dense.sect.subset.indices()},
                      {"base", render(dense.sect.base)},
                      {"size", dense.sect.members.size()},
                      {"min", render(dense.min)},
                      {"max", render(dense.max)},
                      {"upper_order_ideal", ideal},
                      {"members", members}};
    if (cfg.output_format.value_or(OutputFormat::Json) == OutputFormat::Text)
        return "min " + render(dense.min) + "\nmax " + render(dense.max) + "\nideal " + (ideal ? "true" : "false") + "\n";
    return dump(report);
}

std::string cmd_delannoy(const std::string& tokens, const RunConfig& cfg) {
    const auto path = parse_delannoy(tokens);
    const auto lattice = delannoy_to_lattice(path);
    if (cfg.output_format.value_or(OutputFormat::Json) == OutputFormat::Text)
        return render(lattice) + "\n";
    return dump(Json{{"input", render(path)}, {"p", path.p}, {"q", path.q}, {"lattice_path", render(lattice)}});
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
    if (!cfg.output_path) {
        out << text;
        return;
    }
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file)
        throw Error(ErrorCode::IoError, "cannot open " + *cfg.output_path + " for writing");
    file << text;
    if (!file)
        throw Error(ErrorCode::IoError, "failed writing " + *cfg.output_path);
}

void report_error(std::ostream& err, std::string_view code, const std::string& message) {
    err << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

} // namespace

int limit_from_environment() {
    if (const char* value = std::getenv("SECTS_LIMIT_N")) {
        char* end = nullptr;
        const long parsed = std::strtol(value, &end, 10);
        if (end != value && *end == '\0' && parsed > 0 && parsed < 64)
            return static_cast<int>(parsed);
    }
    return kDefaultLimitN;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    cfg.limit_n = limit_from_environment();
    std::string format;
    std::string tokens;
    std::optional<int> limit_flag;

    CLI::App app{"Clans, sects and the rook monoid", "sects"};
    app.require_subcommand(1);

    const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::Json}, {"dot", OutputFormat::Dot}, {"text", OutputFormat::Text}};

    auto add_common = [&](CLI::App* sub, bool needs_q) {
        sub->add_option("-p", cfg.p, "number of plus-weight symbols")->required();
        if (needs_q)
            sub->add_option("-q", cfg.q, "number of minus-weight symbols")->required();
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("-o,--output", cfg.output_path, "write the result to this file");
        sub->add_option("--limit-n", limit_flag, "largest accepted p + q");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list C(p,q) in enumeration order");
    add_common(enumerate, true);
    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the Bruhat order on C(p,q)");
    add_common(hasse, true);
    hasse->add_flag("--color-by-sect", cfg.color_by_sect, "fill nodes by sect");
    auto* sects_cmd = app.add_subcommand("sects", "sect partition of C(p,q) over Schubert cells");
    add_common(sects_cmd, true);
    auto* dense = app.add_subcommand("dense", "the big sect Dense(p,q) and its extrema");
    add_common(dense, true);
    auto* iso = app.add_subcommand("iso", "check Dense(p,p) against the rook monoid R_p");
    add_common(iso, false);
    auto* delannoy = app.add_subcommand("delannoy", "lattice path of a weighted Delannoy path");
    delannoy->add_option("tokens", tokens, "steps such as \"N E D:1\"")->required();
    delannoy->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    delannoy->add_option("-o,--output", cfg.output_path, "write the result to this file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        report_error(err, "UsageError", e.what());
        return kExitError;
    }

    if (!format.empty())
        cfg.output_format = formats.at(format);
    if (limit_flag)
        cfg.limit_n = *limit_flag;

    try {
        if (*enumerate) {
            emit(cmd_enumerate(cfg), cfg, out);
        } else if (*hasse) {
            emit(cmd_hasse(cfg), cfg, out);
        } else if (*sects_cmd) {
            emit(cmd_sects(cfg), cfg, out);
        } else if (*dense) {
            emit(cmd_dense(cfg), cfg, out);
        } else if (*iso) {
            const auto report = verify_dense_iso(cfg.p, cfg.limit_n);
            emit(dump(iso_report_to_json(report)), cfg, out);
            if (!report.isomorphism())
                return kExitCheckFailed;
        } else if (*delannoy) {
            emit(cmd_delannoy(tokens, cfg), cfg, out);
        }
    } catch (const Error& e) {
        report_error(err, error_name(e.code()), e.what());
        return kExitError;
    }
    return 0;
}

} // namespace sects::cli
