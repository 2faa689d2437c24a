#pragma once

// Brute-force reference implementations used only by the tests. None of these
// call into the code paths they are used to check.

#include "sects/clan.hpp"
#include "sects/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using sects::IntMatrix;

// Clan strings over {+,-,1..9} of length p+q, all of them, then filtered.
inline std::set<std::string> naive_clans(int p, int q) {
    const int n = p + q;
    const int max_label = n / 2;
    std::vector<char> alphabet{'+', '-'};
    for (int k = 1; k <= max_label; ++k)
        alphabet.push_back(static_cast<char>('0' + k));

    std::set<std::string> out;
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    while (true) {
        std::string word;
        for (int d : digits)
            word += alphabet[static_cast<std::size_t>(d)];

        std::map<char, int> count;
        for (char c : word)
            count[c]++;
        bool ok = true;
        int pairs = 0;
        for (auto [c, k] : count) {
            if (c >= '1' && c <= '9') {
                ok = ok && k == 2;
                ++pairs;
            }
        }
        if (ok && count['+'] + pairs == p && count['-'] + pairs == q) {
            // relabel by first occurrence
            std::map<char, char> relabel;
            std::string canonical;
            for (char c : word) {
                if (c >= '1' && c <= '9') {
                    if (!relabel.count(c))
                        relabel[c] = static_cast<char>('1' + relabel.size());
                    canonical += relabel[c];
                } else {
                    canonical += c;
                }
            }
            out.insert(canonical);
        }

        int i = n - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == static_cast<int>(alphabet.size()) - 1)
            digits[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        digits[static_cast<std::size_t>(i)]++;
    }
    return out;
}

// Base clan by string surgery on a canonical single-digit clan string.
inline std::string naive_base(const std::string& clan) {
    std::string out;
    std::set<char> seen;
    for (char c : clan) {
        if (c == '+' || c == '-') {
            out += c;
        } else {
            out += seen.count(c) ? '+' : '-';
            seen.insert(c);
        }
    }
    return out;
}

inline std::int64_t cofactor_determinant(const IntMatrix& m) {
    const auto n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    std::int64_t det = 0;
    for (Eigen::Index c = 0; c < n; ++c) {
        if (m(0, c) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            Eigen::Index cc = 0;
            for (Eigen::Index k = 0; k < n; ++k) {
                if (k != c)
                    minor(r - 1, cc++) = m(r, k);
            }
        }
        det += ((c % 2 == 0) ? 1 : -1) * m(0, c) * cofactor_determinant(minor);
    }
    return det;
}

inline std::vector<IntMatrix> brute_force_rooks(int p) {
    std::vector<IntMatrix> out;
    const int cells = p * p;
    for (long mask = 0; mask < (1L << cells); ++mask) {
        IntMatrix m = IntMatrix::Zero(p, p);
        for (int k = 0; k < cells; ++k)
            m(k / p, k % p) = (mask >> k) & 1;
        if ((m.rowwise().sum().array() <= 1).all() && (m.colwise().sum().array() <= 1).all())
            out.push_back(m);
    }
    return out;
}

inline int inversions(const std::vector<int>& w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            count += w[i] > w[j] ? 1 : 0;
    return count;
}

// Bruhat order on S_n as the transitive closure of u -> u t whenever the
// transposition t raises the inversion count. Returns all permutations in
// lexicographic order and leq[a][b].
struct BruhatOracle {
    std::vector<std::vector<int>> perms;
    std::vector<std::vector<bool>> leq;
};

inline BruhatOracle bruhat_by_transpositions(int n) {
    BruhatOracle o;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        o.perms.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));

    const auto size = o.perms.size();
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < size; ++i)
        index[o.perms[i]] = i;

    o.leq.assign(size, std::vector<bool>(size, false));
    for (std::size_t start = 0; start < size; ++start) {
        std::vector<std::size_t> stack{start};
        o.leq[start][start] = true;
        while (!stack.empty()) {
            const auto cur = stack.back();
            stack.pop_back();
            const auto& u = o.perms[cur];
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    auto v = u;
                    std::swap(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
                    if (inversions(v) > inversions(u)) {
                        const auto next = index[v];
                        if (!o.leq[start][next]) {
                            o.leq[start][next] = true;
                            stack.push_back(next);
                        }
                    }
                }
            }
        }
    }
    return o;
}

// Wyser statistics straight from the definitions on a single-digit clan string.
struct NaiveStats {
    std::vector<int> plus;
    std::vector<int> minus;
    std::map<std::pair<int, int>, int> window;
};

inline NaiveStats naive_statistics(const std::string& clan) {
    const int n = static_cast<int>(clan.size());
    NaiveStats s;
    for (int i = 1; i <= n; ++i) {
        int plus = 0, minus = 0;
        for (int a = 0; a < i; ++a) {
            if (clan[static_cast<std::size_t>(a)] == '+')
                ++plus;
            else if (clan[static_cast<std::size_t>(a)] == '-')
                ++minus;
            else {
                for (int b = a + 1; b < i; ++b) {
                    if (clan[static_cast<std::size_t>(b)] == clan[static_cast<std::size_t>(a)]) {
                        ++plus;
                        ++minus;
                    }
                }
            }
        }
        s.plus.push_back(plus);
        s.minus.push_back(minus);
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            int count = 0;
            for (int a = 1; a <= i; ++a) {
                for (int b = j + 1; b <= n; ++b) {
                    const char ca = clan[static_cast<std::size_t>(a - 1)];
                    if (ca != '+' && ca != '-' && ca == clan[static_cast<std::size_t>(b - 1)])
                        ++count;
                }
            }
            s.window[{i, j}] = count;
        }
    }
    return s;
}

inline bool naive_wyser_leq(const std::string& g, const std::string& t) {
    const auto a = naive_statistics(g);
    const auto b = naive_statistics(t);
    for (std::size_t i = 0; i < a.plus.size(); ++i) {
        if (a.plus[i] < b.plus[i] || a.minus[i] < b.minus[i])
            return false;
    }
    for (const auto& [key, value] : a.window) {
        if (value > b.window.at(key))
            return false;
    }
    return true;
}

} // namespace oracle
