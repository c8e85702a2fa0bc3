#include "faulhaber/arithprog.hpp"

#include <stdexcept>

#include "faulhaber/combinatorics.hpp"
#include "faulhaber/detail/linsolve.hpp"
#include "faulhaber/series.hpp"

namespace faulhaber {

void APParams::validate() const {
    if (a < 0) throw std::invalid_argument("arithmetic progression requires a >= 0");
    if (d < 1) throw std::invalid_argument("arithmetic progression requires d >= 1");
    if (n < 1) throw std::invalid_argument("arithmetic progression requires n >= 1");
}

Int ap_oracle(unsigned k, const APParams& p) {
    p.validate();
    Int s = 0;
    for (unsigned r = 0; r < p.n; ++r) s += ipow(p.a + Int(r) * p.d, k);
    return s;
}

Int ap_series(unsigned k, const APParams& p) {
    p.validate();
    TruncatedSeries num = series_exp(Rational(p.a + Int(p.n) * p.d), k + 1) -
                          series_exp(Rational(p.a), k + 1);
    TruncatedSeries den = series_exp(Rational(p.d), k + 1) - series_exp(Rational(0), k + 1);
    TruncatedSeries q = series_div(num, den);
    return to_integer(q.coeff(k) * Rational(factorial(k)));
}

ApFaulhaberK1 ap_faulhaber_k1(const APParams& p) {
    p.validate();
    ApFaulhaberK1 f;
    const Rational a(p.a), d(p.d);
    f.c10 = a / 2 - a * a / (2 * d) - d / 8;
    f.c11 = d / 2;
    f.n_ad = Rational(p.n) + a / d - Rational(1, 2);
    f.s1 = f.c10 + f.c11 * f.n_ad * f.n_ad;
    return f;
}

std::vector<Int> ap_t_coefficients(unsigned k, const Int& a, const Int& d) {
    std::vector<Int> coeffs(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        Int s = 0;
        for (unsigned i = 0; i <= j; ++i) {
            Int term = ipow(Int(j + 1 - i) * d - a, k) * binomial(k + 1, i);
            s += (i % 2 == 0) ? term : -term;
        }
        coeffs[j] = s;
    }
    return coeffs;
}

Polynomial ap_t_polynomial(unsigned k, const Int& a, const Int& d) {
    std::vector<Int> c = ap_t_coefficients(k, a, d);
    std::vector<Rational> v(c.begin(), c.end());
    return Polynomial(std::move(v));
}

Polynomial ap_q_polynomial(unsigned k, const APParams& p) {
    p.validate();
    const Polynomial x_minus_1({Rational(-1), Rational(1)});
    Polynomial q = Polynomial::monomial(1, Rational(ipow(p.a, k))) * x_minus_1.pow(k + 1);
    q = q + ap_t_polynomial(k, p.a + p.d * Int(p.n - 1), -p.d).shifted_up(p.n + 1);
    q = q - ap_t_polynomial(k, p.a, -p.d).shifted_up(2);
    return q;
}

Int ap_met9(unsigned k, const APParams& p) {
    Polynomial q = ap_q_polynomial(k, p);
    return to_integer(q.derivative(k + 1).eval(1) / Rational(factorial(k + 1)));
}

std::vector<Rational> odd_progression_fit(unsigned k) {
    if (k < 1) throw std::invalid_argument("odd_progression_fit requires k >= 1");
    auto odd_sum = [k](unsigned n) {
        Int s = 0;
        for (unsigned i = 1; i <= n; ++i) s += ipow(2 * Int(i) - 1, 2 * k - 1);
        return s;
    };
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    std::vector<Rational> rhs(k);
    for (unsigned n = 1; n <= k; ++n) {
        for (unsigned r = 1; r <= k; ++r) m[n - 1][r - 1] = Rational(ipow(Int(n), 2 * r));
        rhs[n - 1] = Rational(odd_sum(n));
    }
    std::vector<Rational> d = detail::solve_linear(std::move(m), std::move(rhs));
    for (unsigned n = k + 1; n <= k + 5; ++n) {
        Rational lhs(0);
        for (unsigned r = 1; r <= k; ++r) lhs += d[r - 1] * Rational(ipow(Int(n), 2 * r));
        if (lhs != Rational(odd_sum(n)))
            throw std::logic_error("odd progression fit failed validation");
    }
    return d;
}

}  // namespace faulhaber
