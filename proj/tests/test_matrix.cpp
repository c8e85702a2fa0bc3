#include <doctest.h>

#include <random>

#include "faulhaber/matrix.hpp"

using namespace faulhaber;

namespace {

// Independent oracle: textbook Laplace expansion along the first row.
Rational laplace_det(const ExactMatrix& m) {
    if (m.dim() == 1) return m.at(0, 0);
    Rational acc(0);
    for (std::size_t j = 0; j < m.dim(); ++j) {
        if (m.at(0, j) == 0) continue;
        Rational term = m.at(0, j) * laplace_det(m.minor_matrix(0, j));
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

ExactMatrix b12_matrix(const Int& entry_5_3) {
    const Int rows[6][6] = {
        {3, 0, 0, 0, 0, 1},     {10, 5, 0, 0, 0, 2},      {21, 35, 7, 0, 0, 3},
        {36, 126, 84, 9, 0, 4}, {55, 330, 462, 165, 11, 5}, {78, 715, 1716, 1287, 286, 6}};
    ExactMatrix m(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = Rational(rows[i][j]);
    m.at(4, 2) = Rational(entry_5_3);
    return m;
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t dim) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    ExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("small determinants") {
    ExactMatrix one(1);
    one.at(0, 0) = 3;
    CHECK(determinant(one) == 3);

    ExactMatrix tri(2);
    tri.at(0, 0) = 3;
    tri.at(1, 0) = 10;
    tri.at(1, 1) = 5;
    CHECK(determinant(tri) == 15);
}

TEST_CASE("the 6x6 Bernoulli matrix") {
    // With the formula entry C(11,6) = 462 the determinant carries B_12.
    auto good = b12_matrix(462);
    CHECK(determinant(good) == -70050816);
    CHECK(laplace_det(good) == -70050816);
    CHECK(determinant(good) * Rational(1, 276756480) == Rational(-691, 2730));

    // The printed entry 463 is a typo: it fails to reproduce B_12.
    auto typo = b12_matrix(463);
    CHECK(determinant(typo) != -70050816);
    CHECK(determinant(typo) * Rational(1, 276756480) != Rational(-691, 2730));
}

TEST_CASE("determinant agrees with Laplace expansion on random matrices") {
    std::mt19937 rng(19);
    for (std::size_t dim = 1; dim <= 6; ++dim)
        for (int trial = 0; trial < 12; ++trial) {
            auto m = random_matrix(rng, dim);
            CHECK(determinant(m) == laplace_det(m));
        }
}

TEST_CASE("triangular determinants are diagonal products") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (std::size_t dim = 1; dim <= 12; ++dim) {
        ExactMatrix m(dim);
        Rational product(1);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j <= i; ++j) m.at(i, j) = Rational(num(rng), den(rng));
            product *= m.at(i, i);
        }
        CHECK(determinant(m) == product);
    }
}

TEST_CASE("row swap negates, row scaling scales") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_matrix(rng, 5);
        Rational d = determinant(m);

        ExactMatrix swapped = m;
        for (std::size_t j = 0; j < 5; ++j) std::swap(swapped.at(1, j), swapped.at(3, j));
        CHECK(determinant(swapped) == -d);

        ExactMatrix scaled = m;
        Rational c(7, 3);
        for (std::size_t j = 0; j < 5; ++j) scaled.at(2, j) *= c;
        CHECK(determinant(scaled) == c * d);
    }
}

TEST_CASE("singular and degenerate cases") {
    ExactMatrix m(3);  // zero matrix
    CHECK(determinant(m) == 0);

    ExactMatrix dup(3);
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> num(-9, 9);
    for (std::size_t j = 0; j < 3; ++j) {
        dup.at(0, j) = num(rng);
        dup.at(2, j) = dup.at(0, j);
        dup.at(1, j) = num(rng);
    }
    CHECK(determinant(dup) == 0);
    CHECK_THROWS(ExactMatrix(0));
}
