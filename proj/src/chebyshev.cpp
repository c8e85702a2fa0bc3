#include "faulhaber/chebyshev.hpp"

#include <stdexcept>

#include "faulhaber/combinatorics.hpp"
#include "faulhaber/powersum.hpp"
#include "faulhaber/series.hpp"

namespace faulhaber {

Polynomial cheb_u(unsigned n) {
    Polynomial prev = Polynomial::constant(1);
    if (n == 0) return prev;
    Polynomial cur({Rational(0), Rational(2)});
    const Polynomial two_x = cur;
    for (unsigned i = 2; i <= n; ++i) {
        Polynomial next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial cheb_u_explicit(unsigned n) {
    Polynomial u;
    for (unsigned j = 0; 2 * j <= n; ++j) {
        Rational c = Rational(binomial(n - j, static_cast<long>(j)) * ipow(2, n - 2 * j));
        if (j % 2 == 1) c = -c;
        u = u + Polynomial::monomial(n - 2 * j, c);
    }
    return u;
}

Int cheb_u_derivative_at_1(unsigned n, unsigned j) {
    return ipow(2, j) * factorial(j) * binomial(n + j + 1, 2 * j + 1);
}

Int faa_even(unsigned k, unsigned n) {
    if (k < 1) throw std::invalid_argument("faa_even requires k >= 1");
    Rational s(0);
    for (const auto& t : partition_tuples(k)) {
        unsigned m = t.m();
        s += faa_weight(k, t) *
             Rational(ipow(2, m) * factorial(m) * binomial(2 * Int(n) + m + 1, 2 * m + 1));
    }
    return to_integer(s / 2);
}

Int faa_odd(unsigned k, unsigned n) {
    if (k < 1) throw std::invalid_argument("faa_odd requires k >= 1");
    const Int nn(n);
    Rational s = Rational((nn + 1) * ipow(nn, 2 * k - 1));
    for (unsigned j = 1; j + 1 <= k; ++j) {
        Rational inner(0);
        for (const auto& t : partition_tuples(j)) {
            unsigned m = t.m();
            inner += faa_weight(j, t) *
                     Rational(ipow(2, m) * factorial(m) * binomial(nn + m + 1, 2 * m + 1));
        }
        s += Rational(ipow(4, j) * ipow(nn, 2 * k - 2 * j - 1) * binomial(2 * k - 1, 2 * j)) * inner;
    }
    return to_integer(s * Rational(2, ipow(4, k)));
}

Int powersum_via_chebyshev_series(unsigned k, unsigned n) {
    if (k < 1) throw std::invalid_argument("powersum_via_chebyshev_series requires k >= 1");
    const Rational half(1, 2);
    if (k % 2 == 0) {
        // S_2K = (1/2)(-1)^K D^(2K) U_2n(cos(x/2)) at 0.
        unsigned K = k / 2;
        TruncatedSeries u = compose_poly(cheb_u(2 * n), series_cos(half, k));
        Rational v = u.coeff(k) * Rational(factorial(k)) / 2;
        return to_integer(K % 2 == 0 ? v : -v);
    }
    // S_2K-1 = (-1)^(K-1) D^(2K-1) [U_n(cos(x/2)) sin(nx/2)] at 0.
    unsigned K = (k + 1) / 2;
    TruncatedSeries u = compose_poly(cheb_u(n), series_cos(half, k)) *
                        series_sin(Rational(n, 2), k);
    Rational v = u.coeff(k) * Rational(factorial(k));
    return to_integer(K % 2 == 1 ? v : -v);
}

std::vector<Rational> faa_even_grouped(unsigned k) {
    std::vector<Rational> p(k, Rational(0));
    for (const auto& t : partition_tuples(k)) {
        unsigned m = t.m();
        p[m - 1] += faa_weight(k, t) * Rational(ipow(2, m) * factorial(m)) / 2;
    }
    return p;
}

std::vector<Polynomial> faa_odd_grouped(unsigned k) {
    // Group by the binomial C(n+j', 2j'-1): the leading (n+1)n^(2k-1) term
    // contributes n^(2k-1) at j' = 1, and a partition with m parts feeds
    // j' = m+1 through C(n+m+1, 2m+1). The 2/4^k prefactor stays outside.
    std::vector<Polynomial> q(k);
    q[0] = Polynomial::monomial(2 * k - 1);
    for (unsigned j = 1; j + 1 <= k; ++j) {
        for (const auto& t : partition_tuples(j)) {
            unsigned m = t.m();
            Rational w = faa_weight(j, t) * Rational(ipow(2, m) * factorial(m)) *
                         Rational(ipow(4, j) * binomial(2 * k - 1, 2 * j));
            q[m] = q[m] + Polynomial::monomial(2 * k - 2 * j - 1, w);
        }
    }
    return q;
}

Int met5_powersum(unsigned k, unsigned n) { return exotic_powersum(k, n); }

}  // namespace faulhaber
