#ifndef FAULHABER_BERNOULLI_HPP
#define FAULHABER_BERNOULLI_HPP

#include "faulhaber/rational.hpp"

namespace faulhaber {

/// B_m via the classical recurrence sum_{j<=m} C(m+1,j) B_j = 0, B_0 = 1
/// (B_1 = -1/2 convention; only even indices are consumed downstream).
Rational bernoulli_oracle(unsigned m);

/// B_2k via the binomial-entry determinant with last column 1, 2, ..., k.
Rational bernoulli_det(unsigned k);

/// B_2k via Van Malderen's Hessenberg determinant of inverse factorials.
Rational bernoulli_vanmalderen(unsigned k);

/// B_2k as the derivative of the even-index Faulhaber polynomial with
/// respect to n, evaluated at n = 0 (N = 1/2).
Rational bernoulli_from_faulhaber(unsigned k);

/// Product of the primes p with (p-1) | 2k; by von Staudt-Clausen this
/// is exactly the denominator of B_2k. Sanity-check helper.
Int von_staudt_clausen_denominator(unsigned k);

}  // namespace faulhaber

#endif
