#ifndef FAULHABER_POLYNOMIAL_HPP
#define FAULHABER_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "faulhaber/rational.hpp"

namespace faulhaber {

// Dense univariate polynomial over Rational, lowest degree first.
// The indeterminate is anonymous; its interpretation (x, N, S_1, j, n)
// is up to the caller. The zero polynomial is the empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(std::size_t degree, const Rational& c = 1);
    /// 1 + x + ... + x^n.
    static Polynomial geometric(unsigned n);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^i; 0 beyond the stored range.
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(unsigned times = 1) const;
    /// The operator x * d/dx applied `times` times: coeff of x^r picks up r^times.
    Polynomial xddx(unsigned times = 1) const;
    Rational eval(const Rational& x0) const;
    Polynomial pow(unsigned e) const;
    /// Multiplies by x^s.
    Polynomial shifted_up(std::size_t s) const;
    /// Divides by x^s; throws if any lower coefficient is nonzero.
    Polynomial shifted_down(std::size_t s) const;

    /// Human-readable form, descending powers, e.g. "1/11*N^11 - 5/12*N^9".
    std::string to_string(const std::string& var = "x") const;
    /// LaTeX form, descending powers, mirroring journal layout.
    std::string to_latex(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

}  // namespace faulhaber

#endif
