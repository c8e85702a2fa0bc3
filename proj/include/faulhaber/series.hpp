#ifndef FAULHABER_SERIES_HPP
#define FAULHABER_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

struct ZeroDivisorError : std::domain_error {
    ZeroDivisorError() : std::domain_error("series division by an identically zero series") {}
};

struct NonRemovableSingularityError : std::domain_error {
    NonRemovableSingularityError()
        : std::domain_error("series division: numerator valuation below denominator valuation") {}
};

// Formal power series over Rational, truncated at an explicit inclusive
// order K. Exactly K+1 coefficients are stored; zeros are kept, because
// the truncation order is data. Arithmetic contracts the order to the
// minimum of the operands (minus the singularity shift for division).
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(unsigned order) : coeffs_(order + 1, Rational(0)) {}
    /// Takes exactly order+1 coefficients for x^0..x^K.
    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const Rational& coeff(std::size_t i) const { return coeffs_.at(i); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rational& s) const;
    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

    /// Truncates (or zero-extends is forbidden: new_order must be <= order).
    TruncatedSeries truncated(unsigned new_order) const;

private:
    std::vector<Rational> coeffs_;
};

/// Series of exp(c x) up to order K: coefficients c^k / k!.
TruncatedSeries series_exp(const Rational& c, unsigned K);

/// Series of sin(c x) up to order K.
TruncatedSeries series_sin(const Rational& c, unsigned K);

/// Series of cos(c x) up to order K.
TruncatedSeries series_cos(const Rational& c, unsigned K);

/// Exact long division. If the denominator has valuation v, the numerator
/// must vanish to order >= v (removable singularity) and the quotient
/// carries order min(num.K, den.K) - v.
TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den);

/// Horner evaluation of a polynomial at a series argument.
TruncatedSeries compose_poly(const Polynomial& p, const TruncatedSeries& s);

enum class EgfRoute { DirectSum, Met1Division };

/// S_k(n) extracted from the exponential generating function, either by
/// summing exp(r x) directly or by dividing exp((n+1)x)-exp(x) by exp(x)-1.
Int powersum_from_egf(unsigned k, unsigned n, EgfRoute route);

}  // namespace faulhaber

#endif
