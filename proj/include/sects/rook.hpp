#pragma once

#include "sects/clan.hpp"
#include "sects/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sects {

inline constexpr int kDefaultRookLimit = 6;

enum class Corner { NW, SW };

/// Square 0/1 matrix with at most one 1 in each row and column.
class RookMatrix {
public:
    RookMatrix() = default;
    explicit RookMatrix(IntMatrix entries);

    static RookMatrix zero(int p) { return RookMatrix(IntMatrix::Zero(p, p)); }
    static RookMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int size() const { return static_cast<int>(entries_.rows()); }
    const IntMatrix& entries() const { return entries_; }
    std::int64_t operator()(int r, int c) const { return entries_(r, c); }
    int rank() const { return static_cast<int>(entries_.sum()); }

    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const RookMatrix& a, const RookMatrix& b) { return a.entries_ == b.entries_; }
    /// Row-major lexicographic order, for use as a map key.
    friend bool operator<(const RookMatrix& a, const RookMatrix& b);

private:
    IntMatrix entries_;
};

struct RankControlMatrix {
    IntMatrix ranks;
    Corner corner = Corner::NW;
};

struct ClanPair {
    Clan lower;
    Clan upper;
};

struct IsoReport {
    int p = 0;
    std::size_t dense_size = 0;
    std::size_t rook_count = 0;
    bool bijective = false;
    bool order_preserving = false;
    bool order_reflecting = false;
    std::vector<ClanPair> counterexamples;

    bool isomorphism() const { return bijective && order_preserving && order_reflecting; }
};

/// sum_k C(p,k)^2 k!
std::uint64_t rook_count(int p);
std::vector<RookMatrix> enumerate_rooks(int p, int limit_p = kDefaultRookLimit);

/// NW: (i,j) holds the rank of rows 1..i, columns 1..j.
/// SW: (i,j) holds the rank of rows i..n, columns 1..j.
/// Rook-type inputs are counted through prefix sums; anything else goes through
/// exact elimination on each corner submatrix.
template <typename Derived>
RankControlMatrix rank_control(const Eigen::MatrixBase<Derived>& m, Corner corner);

RankControlMatrix rank_control(const std::vector<std::vector<int>>& rows, Corner corner);

bool is_rook_pattern(const IntMatrix& m);

/// NW: M <= M2 iff every NW rank of M is >= that of M2.
/// SW: M <= M2 iff every SW rank of M is <= that of M2.
bool rook_leq(const RookMatrix& m, const RookMatrix& m2, Corner corner = Corner::SW);

/// Bruhat order on involutions through SW rank control of their permutation matrices.
bool involution_leq(const Involution& u, const Involution& w);

/// x_{r,s} = 1 iff c_{r+p} and c_s are the two members of one pair.
RookMatrix clan_to_rook(const Clan& gamma);

/// y in the lower-left block, y^T in the upper-right, and 1s on the diagonal
/// wherever the assembled row and column would otherwise be empty.
Involution rook_to_involution(const RookMatrix& y);

IsoReport verify_dense_iso(int p, int limit_n = kDefaultLimitN);

// Template definition

namespace detail {
RankControlMatrix rook_rank_control(const IntMatrix& m, Corner corner);
}

template <typename Derived>
RankControlMatrix rank_control(const Eigen::MatrixBase<Derived>& m, Corner corner) {
    const IntMatrix values = m.template cast<std::int64_t>();
    if (is_rook_pattern(values))
        return detail::rook_rank_control(values, corner);

    const Eigen::Index rows = values.rows();
    const Eigen::Index cols = values.cols();
    RankControlMatrix result{IntMatrix::Zero(rows, cols), corner};
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            result.ranks(i, j) = corner == Corner::NW
                                     ? exact_rank(values.topLeftCorner(i + 1, j + 1))
                                     : exact_rank(values.bottomLeftCorner(rows - i, j + 1));
        }
    }
    return result;
}

} // namespace sects
