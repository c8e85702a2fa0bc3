#ifndef FAULHABER_POWERSUM_HPP
#define FAULHABER_POWERSUM_HPP

#include <array>
#include <string>
#include <vector>

#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

enum class Parity { Even, Odd };
enum class Basis { N, S1 };
enum class QForm { Stirling, Eulerian };

/// Constants in front of the determinantal formulas.
Rational delta_const(unsigned k);   // (k+1)! / ((2k+2)! 2^(k-1))
Rational omega_const(unsigned k);   // 1 / (k! 8^k)
Rational lambda_const(unsigned k);  // 3 (k+1)! / ((2k+2)! 2^k)

// A power sum in Faulhaber form. For basis N the body is the full
// polynomial in N = n + 1/2. For basis S1 the body is the inner
// polynomial q with S_2k = S_2 * q(S_1) (even) or S_2k-1 = S_1^2 * q(S_1)
// (odd, k >= 2); the prefactor is recorded in `multiplier`.
struct FaulhaberPolynomial {
    enum class Multiplier { None, S2, S1, S1Squared };

    Parity parity;
    Basis basis;
    unsigned k;
    Polynomial body;
    Multiplier multiplier;
};

/// Direct summation 1^k + 2^k + ... + n^k; the cross-module reference.
Int powersum_oracle(unsigned k, unsigned n);

/// Forward-substitutes the triangular recurrence system in N = n + 1/2
/// and returns the whole prefix S_2..S_2k (even) or S_1..S_2k-1 (odd).
std::vector<Int> theorem1_solve(Parity parity, unsigned k, unsigned n);

/// Faulhaber polynomial via last-column cofactor expansion of the k x k
/// determinantal system, in the N or the S_1 basis.
FaulhaberPolynomial faulhaber_poly(Parity parity, unsigned k, Basis basis);

/// Substitutes N = n + 1/2 (and S_1, S_2 where required).
Rational eval_faulhaber(const FaulhaberPolynomial& fp, unsigned n);

/// Q_n(x;k): the polynomial left after k applications of x d/dx to the
/// geometric series, in the Stirling or the Eulerian presentation.
Polynomial q_polynomial(unsigned k, unsigned n, QForm form);

/// S_k via the (k+1)-th derivative of Q_n(x;k) at x = 1.
Int powersum_via_q(unsigned k, unsigned n, QForm form = QForm::Stirling);

/// S_k via k applications of x d/dx to 1 + x + ... + x^n, evaluated at 1.
Int powersum_via_operator(unsigned k, unsigned n);

/// S_k via Stirling-weighted derivatives of the geometric polynomial.
Int powersum_via_stirling(unsigned k, unsigned n);

/// P_k(j): degree-k polynomial driving the alternating binomial formula
/// for S_2k, built from the partition sum over falling factorials.
Polynomial pk_polynomial(unsigned k);

/// S_2k = 2^-(k+1) sum_j (-1)^(n+j) 4^j P_k(j) C(n+j, 2j).
Int exotic_powersum(unsigned k, unsigned n);

/// S_2k-1(2n) by its three representations; all must equal the oracle.
std::array<Int, 3> doubling_identities(unsigned k, unsigned n);

/// Coefficients c_{k,r} of the fitted recurrence
/// sum_r c_{k,r} S_2r(n) = sum_j (-1)^(n+j) 4^j j^k C(n+j, 2j),
/// solved from n = 1..k. They satisfy sum_r c_{k,r} = 4.
std::vector<Rational> fitted_recurrence_coefficients(unsigned k);

struct IdentityReport {
    bool remark2_ok = false;        // ratio of the two Theorem 1 sums = 2n+1
    bool chen_even_ok = false;
    bool chen_odd_ok = false;
    bool fitted_recurrence_ok = false;
    std::string detail;             // which identity failed, and where

    bool all_ok() const { return remark2_ok && chen_even_ok && chen_odd_ok && fitted_recurrence_ok; }
};

IdentityReport verify_identities(unsigned k, unsigned n);

}  // namespace faulhaber

#endif
