#include "oracles.hpp"

#include "sects/linalg.hpp"

#include <Eigen/LU>
#include <doctest.h>

#include <random>

using sects::IntMatrix;

TEST_CASE("exact_determinant agrees with cofactor expansion") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int n = 0; n <= 6; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            IntMatrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m(i, j) = entry(rng);
            CHECK(sects::exact_determinant(m) == oracle::cofactor_determinant(m));
        }
    }
}

TEST_CASE("exact_determinant of simple matrices") {
    CHECK(sects::exact_determinant(IntMatrix::Identity(5, 5)) == 1);
    IntMatrix swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK(sects::exact_determinant(swap) == -1);
    IntMatrix singular(3, 3);
    singular << 1, 2, 3, 2, 4, 6, 0, 0, 1;
    CHECK(sects::exact_determinant(singular) == 0);
}

TEST_CASE("exact_rank agrees with floating-point rank on small integer matrices") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 400; ++trial) {
        const int rows = dim(rng);
        const int cols = dim(rng);
        IntMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m(i, j) = entry(rng) * (trial % 3 == 0 ? (j % 2) : 1);
        const Eigen::FullPivLU<Eigen::MatrixXd> lu(m.cast<double>());
        CHECK(sects::exact_rank(m) == lu.rank());
    }
}

TEST_CASE("rank of a rook pattern is its number of ones") {
    for (const auto& m : oracle::brute_force_rooks(3))
        CHECK(sects::exact_rank(m) == m.sum());
}
