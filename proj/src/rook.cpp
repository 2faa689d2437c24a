#include "sects/rook.hpp"
#include "sects/bruhat.hpp"
#include "sects/error.hpp"
#include "sects/grassmann.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sects {

bool is_rook_pattern(const IntMatrix& m) {
    if (!((m.array() == 0) || (m.array() == 1)).all())
        return false;
    return (m.rowwise().sum().array() <= 1).all() && (m.colwise().sum().array() <= 1).all();
}

RookMatrix::RookMatrix(IntMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
        throw Error(ErrorCode::NotARookMatrix, "rook matrices are square");
    if (!is_rook_pattern(entries_))
        throw Error(ErrorCode::NotARookMatrix,
                    "rook matrices are 0/1 with at most one 1 per row and column");
}

namespace {

IntMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
    const auto height = static_cast<Eigen::Index>(rows.size());
    const auto width = rows.empty() ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
    IntMatrix m(height, width);
    for (Eigen::Index r = 0; r < height; ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        if (static_cast<Eigen::Index>(row.size()) != width)
            throw Error(ErrorCode::NotRectangular, "matrix rows have different lengths");
        for (Eigen::Index c = 0; c < width; ++c)
            m(r, c) = row[static_cast<std::size_t>(c)];
    }
    return m;
}

bool sw_dominated(const IntMatrix& a, const IntMatrix& b) {
    return (rank_control(a, Corner::SW).ranks.array() <= rank_control(b, Corner::SW).ranks.array()).all();
}

void place_rooks(int p, int row, IntMatrix& current, std::vector<bool>& used, std::vector<RookMatrix>& out) {
    if (row == p) {
        out.emplace_back(current);
        return;
    }
    place_rooks(p, row + 1, current, used, out);
    for (int col = 0; col < p; ++col) {
        if (used[static_cast<std::size_t>(col)])
            continue;
        used[static_cast<std::size_t>(col)] = true;
        current(row, col) = 1;
        place_rooks(p, row + 1, current, used, out);
        current(row, col) = 0;
        used[static_cast<std::size_t>(col)] = false;
    }
}

} // namespace

RookMatrix RookMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    return RookMatrix(matrix_from_rows(rows));
}

std::vector<std::vector<int>> RookMatrix::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(size()));
    for (int r = 0; r < size(); ++r) {
        for (int c = 0; c < size(); ++c)
            out[static_cast<std::size_t>(r)].push_back(static_cast<int>(entries_(r, c)));
    }
    return out;
}

bool operator<(const RookMatrix& a, const RookMatrix& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    for (int r = 0; r < a.size(); ++r) {
        for (int c = 0; c < a.size(); ++c) {
            if (a(r, c) != b(r, c))
                return a(r, c) < b(r, c);
        }
    }
    return false;
}

std::uint64_t rook_count(int p) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;     // C(p,k)
    std::uint64_t factorial = 1; // k!
    for (int k = 0; k <= p; ++k) {
        if (k > 0) {
            binom = binom * static_cast<std::uint64_t>(p - k + 1) / static_cast<std::uint64_t>(k);
            factorial *= static_cast<std::uint64_t>(k);
        }
        total += binom * binom * factorial;
    }
    return total;
}

std::vector<RookMatrix> enumerate_rooks(int p, int limit_p) {
    if (p < 1)
        throw Error(ErrorCode::InvalidArgument, "enumerate_rooks needs p >= 1");
    if (p > limit_p)
        throw Error(ErrorCode::LimitExceeded,
                    "p = " + std::to_string(p) + " exceeds the rook limit " + std::to_string(limit_p));
    std::vector<RookMatrix> out;
    out.reserve(static_cast<std::size_t>(rook_count(p)));
    IntMatrix current = IntMatrix::Zero(p, p);
    std::vector<bool> used(static_cast<std::size_t>(p), false);
    place_rooks(p, 0, current, used, out);
    return out;
}

RankControlMatrix detail::rook_rank_control(const IntMatrix& m, Corner corner) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    RankControlMatrix result{IntMatrix::Zero(rows, cols), corner};
    // Rook-type matrices have rank equal to the number of 1s in any corner region.
    for (Eigen::Index step = 0; step < rows; ++step) {
        const Eigen::Index i = corner == Corner::NW ? step : rows - 1 - step;
        const Eigen::Index previous = corner == Corner::NW ? i - 1 : i + 1;
        std::int64_t running = 0;
        for (Eigen::Index j = 0; j < cols; ++j) {
            running += m(i, j);
            const bool has_previous = previous >= 0 && previous < rows;
            result.ranks(i, j) = running + (has_previous ? result.ranks(previous, j) : 0);
        }
    }
    return result;
}

RankControlMatrix rank_control(const std::vector<std::vector<int>>& rows, Corner corner) {
    return rank_control(matrix_from_rows(rows), corner);
}

bool rook_leq(const RookMatrix& m, const RookMatrix& m2, Corner corner) {
    if (m.size() != m2.size())
        throw Error(ErrorCode::ShapeMismatch, "rook matrices of different sizes");
    const auto a = rank_control(m.entries(), corner).ranks;
    const auto b = rank_control(m2.entries(), corner).ranks;
    return corner == Corner::NW ? (a.array() >= b.array()).all() : (a.array() <= b.array()).all();
}

bool involution_leq(const Involution& u, const Involution& w) {
    if (u.size() != w.size())
        throw Error(ErrorCode::ShapeMismatch, "involutions on different point sets");
    return sw_dominated(u.matrix(), w.matrix());
}

RookMatrix clan_to_rook(const Clan& gamma) {
    const int p = gamma.p();
    std::vector<ClanSymbol> dense_base(static_cast<std::size_t>(p), ClanSymbol::minus());
    dense_base.insert(dense_base.end(), static_cast<std::size_t>(p), ClanSymbol::plus());
    if (gamma.q() != p || base_clan(gamma) != canonicalize(dense_base))
        throw Error(ErrorCode::NotInDenseSect, render(gamma) + " is not in Dense(p,p)");

    IntMatrix x = IntMatrix::Zero(p, p);
    for (int r = 0; r < p; ++r) {
        const int position = r + p;
        if (gamma[position].is_pair())
            x(r, gamma.mate(position)) = 1;
    }
    return RookMatrix(std::move(x));
}

Involution rook_to_involution(const RookMatrix& y) {
    const int p = y.size();
    std::vector<int> images(static_cast<std::size_t>(2 * p));
    for (int i = 0; i < 2 * p; ++i)
        images[static_cast<std::size_t>(i)] = i + 1;
    for (int r = 0; r < p; ++r) {
        for (int s = 0; s < p; ++s) {
            if (y(r, s) == 1) {
                images[static_cast<std::size_t>(p + r)] = s + 1;
                images[static_cast<std::size_t>(s)] = p + r + 1;
            }
        }
    }
    return Involution(std::move(images));
}

IsoReport verify_dense_iso(int p, int limit_n) {
    if (p < 1)
        throw Error(ErrorCode::InvalidArgument, "verify_dense_iso needs p >= 1");
    if (2 * p > limit_n)
        throw Error(ErrorCode::LimitExceeded,
                    "2p = " + std::to_string(2 * p) + " exceeds the enumeration limit " + std::to_string(limit_n));

    const auto dense = dense_sect(p, p, limit_n).sect.members;
    const auto rooks = enumerate_rooks(p, std::max(kDefaultRookLimit, limit_n / 2));

    IsoReport report;
    report.p = p;
    report.dense_size = dense.size();
    report.rook_count = rooks.size();

    std::vector<RookMatrix> images;
    std::vector<ClanStatistics> stats;
    images.reserve(dense.size());
    for (const auto& gamma : dense) {
        images.push_back(clan_to_rook(gamma));
        stats.push_back(clan_statistics(gamma));
    }

    bool injective = true;
    std::map<RookMatrix, std::size_t> seen;
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto [it, fresh] = seen.try_emplace(images[i], i);
        if (!fresh) {
            injective = false;
            report.counterexamples.push_back({dense[it->second], dense[i]});
        }
    }
    const std::set<RookMatrix> all_rooks(rooks.begin(), rooks.end());
    const bool onto = std::all_of(all_rooks.begin(), all_rooks.end(),
                                  [&](const RookMatrix& y) { return seen.count(y) == 1; });
    report.bijective = injective && onto;

    report.order_preserving = true;
    report.order_reflecting = true;
    for (std::size_t a = 0; a < dense.size(); ++a) {
        for (std::size_t b = 0; b < dense.size(); ++b) {
            const bool clan_order = wyser_leq(stats[a], stats[b]);
            const bool rook_order = rook_leq(images[a], images[b], Corner::SW);
            if (clan_order && !rook_order)
                report.order_preserving = false;
            if (rook_order && !clan_order)
                report.order_reflecting = false;
            if (clan_order != rook_order)
                report.counterexamples.push_back({dense[a], dense[b]});
        }
    }
    return report;
}

} // namespace sects
