#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <utility>

namespace sects {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<std::int64_t>;

/// Exact determinant of an integer matrix by Bareiss fraction-free elimination.
/// Every intermediate is a minor of the input, so nothing overflows as long as
/// the Hadamard bound of the input fits in the scalar type.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    static_assert(std::is_integral_v<Scalar>, "exact_determinant needs an integer scalar");
    eigen_assert(input.rows() == input.cols());

    Matrix<Scalar> a = input;
    const Eigen::Index n = a.rows();
    if (n == 0)
        return Scalar{1};

    Scalar sign = 1;
    Scalar previous = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return Scalar{0};
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Exact rank over the rationals, again by fraction-free elimination.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    static_assert(std::is_integral_v<Scalar>, "exact_rank needs an integer scalar");

    Matrix<std::int64_t> a = input.template cast<std::int64_t>();
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();

    Eigen::Index rank = 0;
    std::int64_t previous = 1;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot = rank;
        while (pivot < rows && a(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        a.row(rank).swap(a.row(pivot));
        for (Eigen::Index i = rank + 1; i < rows; ++i) {
            for (Eigen::Index j = col + 1; j < cols; ++j)
                a(i, j) = (a(i, j) * a(rank, col) - a(i, col) * a(rank, j)) / previous;
            a(i, col) = 0;
        }
        previous = a(rank, col);
        ++rank;
    }
    return rank;
}

} // namespace sects
