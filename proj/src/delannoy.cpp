#include "sects/delannoy.hpp"
#include "sects/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sects {

namespace {

DelannoyStep parse_step(const std::string& token) {
    if (token == "N")
        return {DelannoyKind::N, 0};
    if (token == "E")
        return {DelannoyKind::E, 0};
    if (token.size() > 2 && token[0] == 'D' && token[1] == ':') {
        std::string digits = token.substr(2);
        bool negative = false;
        if (digits.front() == '-') {
            negative = true;
            digits.erase(0, 1);
        }
        const bool numeric = !digits.empty() && digits.size() <= 9 &&
                             std::all_of(digits.begin(), digits.end(),
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        if (!numeric)
            throw Error(ErrorCode::BadToken, "bad diagonal weight in '" + token + "'");
        const int weight = std::stoi(digits);
        if (negative || weight == 0)
            throw Error(ErrorCode::NonPositiveWeight, "diagonal weights are positive: '" + token + "'");
        return {DelannoyKind::D, weight};
    }
    throw Error(ErrorCode::BadToken, "unknown Delannoy step '" + token + "'");
}

} // namespace

WeightedDelannoyPath parse_delannoy(std::string_view text) {
    WeightedDelannoyPath path;
    std::istringstream in{std::string(text)};
    for (std::string token; in >> token;) {
        const auto step = parse_step(token);
        path.steps.push_back(step);
        if (step.kind != DelannoyKind::N)
            ++path.p;
        if (step.kind != DelannoyKind::E)
            ++path.q;
    }
    if (path.steps.empty())
        throw Error(ErrorCode::EmptyInput, "empty Delannoy path");
    return path;
}

std::string render(const WeightedDelannoyPath& path) {
    std::string out;
    for (const auto& step : path.steps) {
        if (!out.empty())
            out += ' ';
        out += static_cast<char>(step.kind);
        if (step.kind == DelannoyKind::D)
            out += ":" + std::to_string(step.weight);
    }
    return out;
}

LatticePath delannoy_to_lattice(const WeightedDelannoyPath& path) {
    LatticePath lattice;
    for (const auto& step : path.steps) {
        switch (step.kind) {
        case DelannoyKind::N:
            lattice.steps.push_back(Step::N);
            break;
        case DelannoyKind::E:
            lattice.steps.push_back(Step::E);
            break;
        case DelannoyKind::D: {
            const auto length = static_cast<int>(lattice.steps.size());
            if (step.weight < 1 || step.weight > length + 1)
                throw Error(ErrorCode::WeightOutOfRange,
                            "weight " + std::to_string(step.weight) + " cannot be inserted into a word of length " +
                                std::to_string(length));
            lattice.steps.insert(lattice.steps.begin() + (step.weight - 1), Step::N);
            lattice.steps.push_back(Step::E);
            break;
        }
        }
    }
    return lattice;
}

} // namespace sects
