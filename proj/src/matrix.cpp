#include "faulhaber/matrix.hpp"

#include <boost/multiprecision/integer.hpp>

namespace faulhaber {

ExactMatrix ExactMatrix::minor_matrix(std::size_t row, std::size_t col) const {
    ExactMatrix m(dim_ - 1);
    for (std::size_t i = 0, mi = 0; i < dim_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, mj = 0; j < dim_; ++j) {
            if (j == col) continue;
            m.at(mi, mj) = at(i, j);
            ++mj;
        }
        ++mi;
    }
    return m;
}

namespace {

Rational det_gauss(ExactMatrix m) {
    const std::size_t n = m.dim();
    Rational det(1);
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t pivot = p;
        while (pivot < n && m.at(pivot, p) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != p) {
            for (std::size_t j = p; j < n; ++j) std::swap(m.at(p, j), m.at(pivot, j));
            det = -det;
        }
        det *= m.at(p, p);
        for (std::size_t i = p + 1; i < n; ++i) {
            if (m.at(i, p) == 0) continue;
            Rational f = m.at(i, p) / m.at(p, p);
            for (std::size_t j = p; j < n; ++j) m.at(i, j) -= f * m.at(p, j);
        }
    }
    return det;
}

Rational det_bareiss(const ExactMatrix& src) {
    const std::size_t n = src.dim();
    // Clear each row to integers; det scales by the product of the LCMs.
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j)
            l = boost::multiprecision::lcm(l, denominator(src.at(i, j)));
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = numerator(src.at(i, j)) * (l / denominator(src.at(i, j)));
        scale *= l;
    }

    int sign = 1;
    Int prev = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        std::size_t pivot = p;
        while (pivot < n && m[pivot][p] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != p) {
            std::swap(m[p], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                Int t = m[i][j] * m[p][p] - m[i][p] * m[p][j];
                m[i][j] = t / prev;  // divides exactly (Sylvester identity)
            }
            m[i][p] = 0;
        }
        prev = m[p][p];
    }
    Int d = m[n - 1][n - 1];
    if (sign < 0) d = -d;
    return Rational(d, scale);
}

}  // namespace

Rational determinant(const ExactMatrix& m) {
    if (m.dim() <= 4) return det_gauss(m);
    return det_bareiss(m);
}

}  // namespace faulhaber
