#ifndef FAULHABER_ARITHPROG_HPP
#define FAULHABER_ARITHPROG_HPP

#include <vector>

#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

// Arithmetic progression a, a+d, ..., a+(n-1)d.
struct APParams {
    Int a;       // initial term, >= 0
    Int d;       // common difference, >= 1
    unsigned n;  // term count, >= 1

    void validate() const;
};

/// Direct summation of the k-th powers of the first n progression terms.
Int ap_oracle(unsigned k, const APParams& p);

/// Same value via exact division of the generating-function series
/// (e^{(a+nd)x} - e^{ax}) / (e^{dx} - 1).
Int ap_series(unsigned k, const APParams& p);

struct ApFaulhaberK1 {
    Rational c10;   // a/2 - a^2/(2d) - d/8
    Rational c11;   // d/2
    Rational n_ad;  // n + a/d - 1/2
    Rational s1;    // c10 + c11 * n_ad^2
};

/// The k = 1 Faulhaber form of the progression sum.
ApFaulhaberK1 ap_faulhaber_k1(const APParams& p);

/// Coefficients A_{k,j}(a,d) of the degree-k polynomial T_k(x,a,d).
std::vector<Int> ap_t_coefficients(unsigned k, const Int& a, const Int& d);

/// T_k(x,a,d) = sum_j A_{k,j}(a,d) x^j.
Polynomial ap_t_polynomial(unsigned k, const Int& a, const Int& d);

/// Q_n^{a,d}(x;k) = a^k x(x-1)^{k+1} + x^{n+1} T_k(x, a+d(n-1), -d)
///                - x^2 T_k(x, a, -d).
Polynomial ap_q_polynomial(unsigned k, const APParams& p);

/// S_k^{a,d} via the (k+1)-th derivative of Q_n^{a,d}(x;k) at x = 1.
Int ap_met9(unsigned k, const APParams& p);

/// Fit-and-validate for the odd-number progression (a=1, d=2):
/// coefficients d_{k,r} with sum_{i<=n} (2i-1)^(2k-1) = sum_r d_{k,r} n^(2r),
/// solved from n = 1..k and validated at n = k+1..k+5.
std::vector<Rational> odd_progression_fit(unsigned k);

}  // namespace faulhaber

#endif
