#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace reference {

using Edge = std::pair<std::string, std::string>; // (lower, upper)

inline const std::set<Edge> kCoversC21{
    {"++-", "+11"}, {"+-+", "+11"}, {"+-+", "11+"},
    {"-++", "11+"}, {"+11", "1+1"}, {"11+", "1+1"},
};

// Cover relations of C(2,2), written out by hand.
inline const std::set<Edge> kCoversC22{
    {"1+-1", "1221"}, {"1212", "1221"}, {"1-+1", "1221"},
    {"+1-1", "1+-1"}, {"1+1-", "1+-1"}, {"1122", "1+-1"},
    {"+1-1", "1212"}, {"1+1-", "1212"}, {"1122", "1212"}, {"1-1+", "1212"}, {"-1+1", "1212"},
    {"1122", "1-+1"}, {"1-1+", "1-+1"}, {"-1+1", "1-+1"},
    {"+11-", "+1-1"}, {"+-11", "+1-1"},
    {"+11-", "1+1-"}, {"11+-", "1+1-"},
    {"+-11", "1122"}, {"11+-", "1122"}, {"11-+", "1122"}, {"-+11", "1122"},
    {"11-+", "1-1+"}, {"-11+", "1-1+"},
    {"-+11", "-1+1"}, {"-11+", "-1+1"},
    {"++--", "+11-"}, {"+-+-", "+11-"},
    {"+-+-", "+-11"}, {"+--+", "+-11"},
    {"+-+-", "11+-"}, {"-++-", "11+-"},
    {"+--+", "11-+"}, {"-+-+", "11-+"},
    {"-++-", "-+11"}, {"-+-+", "-+11"},
    {"-+-+", "-11+"}, {"--++", "-11+"},
};

// Rank-control example: a 6x6 rook matrix and its upper-left rank table.
inline const std::vector<std::vector<int>> kExampleRook{
    {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0},
    {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
};
inline const std::vector<std::vector<int>> kExampleRanks{
    {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 2, 2},
    {1, 2, 2, 2, 3, 3}, {1, 2, 3, 3, 4, 4}, {1, 2, 3, 3, 4, 4},
};

} // namespace reference
