#ifndef FAULHABER_MATRIX_HPP
#define FAULHABER_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "faulhaber/rational.hpp"

namespace faulhaber {

// Square Rational matrix, row-major.
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Rational(0)) {
        if (dim == 0) throw std::invalid_argument("matrix dimension must be >= 1");
    }

    std::size_t dim() const { return dim_; }
    Rational& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    /// Matrix with row `row` and column `col` removed; dim must be >= 2.
    ExactMatrix minor_matrix(std::size_t row, std::size_t col) const;

private:
    std::size_t dim_;
    std::vector<Rational> entries_;
};

/// Exact determinant. Rational Gaussian elimination for dim <= 4;
/// denominator clearing plus fraction-free Bareiss elimination above that.
Rational determinant(const ExactMatrix& m);

}  // namespace faulhaber

#endif
