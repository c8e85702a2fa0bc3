#ifndef FAULHABER_CHEBYSHEV_HPP
#define FAULHABER_CHEBYSHEV_HPP

#include <vector>

#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

/// Chebyshev polynomial of the second kind via the three-term recurrence
/// U_0 = 1, U_1 = 2x, U_n = 2x U_{n-1} - U_{n-2}.
Polynomial cheb_u(unsigned n);

/// The explicit alternating-binomial form of U_n; an independent route
/// used to cross-check cheb_u.
Polynomial cheb_u_explicit(unsigned n);

/// j-th derivative of U_n at x = 1, in closed form: 2^j j! C(n+j+1, 2j+1).
Int cheb_u_derivative_at_1(unsigned n, unsigned j);

/// S_2k via the partition sum over derivatives of U_2n at 1.
Int faa_even(unsigned k, unsigned n);

/// S_2k-1 via the Leibniz/partition expansion of U_n(cos(x/2)) sin(nx/2).
Int faa_odd(unsigned k, unsigned n);

/// S_2k by direct series differentiation of U_2n(cos(x/2)) (even index)
/// or U_n(cos(x/2)) sin(nx/2) (odd index); a route independent of the
/// partition sums. Takes the power index, k >= 1.
Int powersum_via_chebyshev_series(unsigned k, unsigned n);

/// Coefficients p_{k,m} with S_2k = sum_m p_{k,m} C(2n+m+1, 2m+1),
/// obtained by grouping the partition sum by m. Index m = 1..k.
std::vector<Rational> faa_even_grouped(unsigned k);

/// Polynomials Q_{k,j}(n) with S_2k-1 = (2/4^k) sum_j Q_{k,j}(n) C(n+j, 2j-1),
/// obtained by grouping the odd partition sum. Index j = 1..k.
std::vector<Polynomial> faa_odd_grouped(unsigned k);

/// Delegates to the alternating-binomial power sum; anchors the
/// Chebyshev-side derivation of that formula.
Int met5_powersum(unsigned k, unsigned n);

}  // namespace faulhaber

#endif
