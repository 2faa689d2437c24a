#pragma once

#include "sects/grassmann.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sects {

enum class DelannoyKind : char { N = 'N', E = 'E', D = 'D' };

struct DelannoyStep {
    DelannoyKind kind = DelannoyKind::N;
    int weight = 0; // positive iff kind == D

    friend bool operator==(const DelannoyStep&, const DelannoyStep&) = default;
};

struct WeightedDelannoyPath {
    std::vector<DelannoyStep> steps;
    int p = 0; // #E + #D
    int q = 0; // #N + #D
};

/// Tokens over {N, E, D:w}, separated by whitespace; w is a positive integer.
WeightedDelannoyPath parse_delannoy(std::string_view text);

/// Inverse of parse_delannoy: "N E D:2".
std::string render(const WeightedDelannoyPath& path);

/// Lattice path of the sect: N and E are appended, (D,w) inserts an N so that
/// it becomes the w-th step of the partial word and then appends an E.
LatticePath delannoy_to_lattice(const WeightedDelannoyPath& path);

} // namespace sects
