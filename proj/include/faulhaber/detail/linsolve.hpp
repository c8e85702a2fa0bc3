#ifndef FAULHABER_DETAIL_LINSOLVE_HPP
#define FAULHABER_DETAIL_LINSOLVE_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "faulhaber/rational.hpp"

namespace faulhaber::detail {

// Small exact Gaussian solve for the fit-and-validate helpers. Not a
// general linear-algebra facility; the determinant kernel lives in
// matrix.hpp.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m,
                                          std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t pivot = p;
        while (pivot < n && m[pivot][p] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular fit system");
        std::swap(m[p], m[pivot]);
        std::swap(rhs[p], rhs[pivot]);
        for (std::size_t i = p + 1; i < n; ++i) {
            if (m[i][p] == 0) continue;
            Rational f = m[i][p] / m[p][p];
            for (std::size_t j = p; j < n; ++j) m[i][j] -= f * m[p][j];
            rhs[i] -= f * rhs[p];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }
    return x;
}

}  // namespace faulhaber::detail

#endif
