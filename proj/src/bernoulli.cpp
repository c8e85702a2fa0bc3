#include "faulhaber/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "faulhaber/combinatorics.hpp"
#include "faulhaber/matrix.hpp"
#include "faulhaber/powersum.hpp"

namespace faulhaber {

Rational bernoulli_oracle(unsigned m) {
    static std::vector<Rational> table{Rational(1)};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    while (table.size() <= m) {
        unsigned mm = static_cast<unsigned>(table.size());
        Rational s(0);
        for (unsigned j = 0; j < mm; ++j) s += Rational(binomial(mm + 1, j)) * table[j];
        table.push_back(-s / Rational(mm + 1));
    }
    return table[m];
}

Rational bernoulli_det(unsigned k) {
    ExactMatrix m(k);
    for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = 1; j < k; ++j) m.at(i - 1, j - 1) = Rational(binomial(2 * i + 1, 2 * j));
        m.at(i - 1, k - 1) = Rational(i);
    }
    Rational prefactor(4 * factorial(k + 1), factorial(2 * k + 2) * ipow(2, k));
    return prefactor * determinant(m);
}

Rational bernoulli_vanmalderen(unsigned k) {
    ExactMatrix m(k);
    for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = 1; j <= k; ++j) {
            if (j <= i)
                m.at(i - 1, j - 1) = Rational(1, factorial(2 * (i - j) + 3));
            else if (j == i + 1)
                m.at(i - 1, j - 1) = 1;
        }
    }
    Rational prefactor(factorial(2 * k), 2 * (ipow(2, 2 * k - 1) - 1));
    if (k % 2 == 0) prefactor = -prefactor;  // (-1)^(k+1)
    return prefactor * determinant(m);
}

Rational bernoulli_from_faulhaber(unsigned k) {
    // dS_2k/dn at n = 0, with dN/dn = 1 and N = 1/2 there.
    FaulhaberPolynomial fp = faulhaber_poly(Parity::Even, k, Basis::N);
    return fp.body.derivative().eval(Rational(1, 2));
}

Int von_staudt_clausen_denominator(unsigned k) {
    Int product = 1;
    for (unsigned p = 2; p <= 2 * k + 1; ++p) {
        bool prime = p >= 2;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (prime && (2 * k) % (p - 1) == 0) product *= p;
    }
    return product;
}

}  // namespace faulhaber
