#include "faulhaber/series.hpp"

#include <algorithm>

#include "faulhaber/combinatorics.hpp"

namespace faulhaber {

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    unsigned K = std::min(order(), o.order());
    std::vector<Rational> v(K + 1);
    for (unsigned i = 0; i <= K; ++i) v[i] = coeffs_[i] + o.coeffs_[i];
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    unsigned K = std::min(order(), o.order());
    std::vector<Rational> v(K + 1, Rational(0));
    for (unsigned i = 0; i <= K; ++i)
        for (unsigned j = 0; i + j <= K && j <= o.order(); ++j)
            if (i <= order()) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c *= s;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::truncated(unsigned new_order) const {
    if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries series_exp(const Rational& c, unsigned K) {
    std::vector<Rational> v(K + 1);
    Rational p(1);
    for (unsigned k = 0; k <= K; ++k) {
        v[k] = p / Rational(factorial(k));
        p *= c;
    }
    return TruncatedSeries(std::move(v));
}

TruncatedSeries series_sin(const Rational& c, unsigned K) {
    std::vector<Rational> v(K + 1, Rational(0));
    for (unsigned k = 0; 2 * k + 1 <= K; ++k) {
        Rational t = rpow(c, 2 * k + 1) / Rational(factorial(2 * k + 1));
        v[2 * k + 1] = (k % 2 == 0) ? t : -t;
    }
    return TruncatedSeries(std::move(v));
}

TruncatedSeries series_cos(const Rational& c, unsigned K) {
    std::vector<Rational> v(K + 1, Rational(0));
    for (unsigned k = 0; 2 * k <= K; ++k) {
        Rational t = rpow(c, 2 * k) / Rational(factorial(2 * k));
        v[2 * k] = (k % 2 == 0) ? t : -t;
    }
    return TruncatedSeries(std::move(v));
}

TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den) {
    unsigned v = 0;
    while (v <= den.order() && den.coeff(v) == 0) ++v;
    if (v > den.order()) throw ZeroDivisorError();
    for (unsigned i = 0; i < v && i <= num.order(); ++i)
        if (num.coeff(i) != 0) throw NonRemovableSingularityError();

    unsigned K = std::min(num.order(), den.order()) - v;
    std::vector<Rational> q(K + 1, Rational(0));
    for (unsigned i = 0; i <= K; ++i) {
        Rational acc = num.coeff(i + v);
        for (unsigned j = 0; j < i; ++j) acc -= q[j] * den.coeff(i - j + v);
        q[i] = acc / den.coeff(v);
    }
    return TruncatedSeries(std::move(q));
}

TruncatedSeries compose_poly(const Polynomial& p, const TruncatedSeries& s) {
    TruncatedSeries acc(s.order());
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
        acc = acc * s;
        std::vector<Rational> v = acc.coefficients();
        v[0] += *it;
        acc = TruncatedSeries(std::move(v));
    }
    return acc;
}

Int powersum_from_egf(unsigned k, unsigned n, EgfRoute route) {
    if (route == EgfRoute::DirectSum) {
        TruncatedSeries acc(k);
        for (unsigned r = 1; r <= n; ++r) acc = acc + series_exp(Rational(r), k);
        return to_integer(acc.coeff(k) * Rational(factorial(k)));
    }
    // (e^{(n+1)x} - e^x) / (e^x - 1); one order extra absorbs the shift.
    TruncatedSeries num = series_exp(Rational(n + 1), k + 1) - series_exp(Rational(1), k + 1);
    TruncatedSeries den = series_exp(Rational(1), k + 1) - series_exp(Rational(0), k + 1);
    TruncatedSeries q = series_div(num, den);
    return to_integer(q.coeff(k) * Rational(factorial(k)));
}

}  // namespace faulhaber
