#ifndef FAULHABER_COMBINATORICS_HPP
#define FAULHABER_COMBINATORICS_HPP

#include <vector>

#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

Int factorial(unsigned n);

/// (2k-1)!! = 1*3*5*...*(2k-1); 1 for k = 0.
Int double_factorial_odd(unsigned k);

/// Binomial coefficient for arbitrary integer upper argument:
/// C(n, k) = (n)_k / k!. Zero when k < 0, and when 0 <= n < k.
Int binomial(const Int& n, long k);

/// x (x-1) ... (x-m+1); 1 when m = 0.
Rational falling_factorial(const Rational& x, unsigned m);

/// Falling factorial of a polynomial argument: p (p-1) ... (p-m+1).
Polynomial falling_factorial(const Polynomial& p, unsigned m);

/// Stirling numbers of the second kind; {0,0} = 1, zero outside 0 <= j <= k.
Int stirling2(unsigned k, unsigned j);

/// Eulerian number <j, i> in the convention A_j(x) = sum_{i=1..j} <j,i> x^i.
Int eulerian_number(unsigned j, unsigned i);

/// Eulerian polynomial; A_0(x) = 1, A_1(x) = x, A_2(x) = x + x^2.
Polynomial eulerian_polynomial(unsigned j);

// Nonnegative tuple (b_1, ..., b_k) with sum r*b_r = k.
struct PartitionTuple {
    std::vector<unsigned> parts;  // parts[r-1] = b_r

    /// m = b_1 + ... + b_k, the number of parts of the underlying partition.
    unsigned m() const {
        unsigned s = 0;
        for (unsigned b : parts) s += b;
        return s;
    }
    bool operator==(const PartitionTuple& o) const { return parts == o.parts; }
};

/// All solutions of b_1 + 2 b_2 + ... + k b_k = k, lexicographic by parts.
std::vector<PartitionTuple> partition_tuples(unsigned k);

/// Multinomial-style Faa di Bruno weight shared by the partition-sum
/// formulas: (2k)! / (b_1! ... b_k!) * prod_r (4^r (2r)!)^(-b_r).
Rational faa_weight(unsigned k, const PartitionTuple& t);

}  // namespace faulhaber

#endif
