#include "faulhaber/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace faulhaber {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::geometric(unsigned n) {
    return Polynomial(std::vector<Rational>(n + 1, Rational(1)));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative(unsigned times) const {
    Polynomial p = *this;
    for (unsigned t = 0; t < times; ++t) {
        if (p.coeffs_.size() <= 1) return Polynomial();
        std::vector<Rational> v(p.coeffs_.size() - 1);
        for (std::size_t i = 1; i < p.coeffs_.size(); ++i)
            v[i - 1] = p.coeffs_[i] * Rational(Int(i));
        p = Polynomial(std::move(v));
    }
    return p;
}

Polynomial Polynomial::xddx(unsigned times) const {
    std::vector<Rational> v = coeffs_;
    for (std::size_t r = 0; r < v.size(); ++r)
        v[r] *= Rational(ipow(Int(r), times));
    return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x0) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x0 + *it;
    return acc;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Polynomial Polynomial::shifted_up(std::size_t s) const {
    if (is_zero()) return Polynomial();
    std::vector<Rational> v(coeffs_.size() + s, Rational(0));
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<long>(s));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted_down(std::size_t s) const {
    for (std::size_t i = 0; i < s && i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            throw std::domain_error("shifted_down: nonzero coefficient below the shift");
    if (coeffs_.size() <= s) return Polynomial();
    return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<long>(s), coeffs_.end()));
}

namespace {

std::string term(const Rational& c, std::size_t deg, const std::string& var, bool latex,
                 bool leading) {
    Rational a = c < 0 ? Rational(-c) : c;
    std::ostringstream os;
    if (leading) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    std::string mag;
    if (latex && !is_integer(a))
        mag = "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}";
    else
        mag = to_fraction_string(a);
    if (deg == 0) {
        os << mag;
    } else {
        if (a != 1) os << mag << (latex ? " " : "*");
        os << var;
        if (deg > 1) os << (latex ? "^{" + std::to_string(deg) + "}" : "^" + std::to_string(deg));
    }
    return os.str();
}

std::string render(const std::vector<Rational>& coeffs, const std::string& var, bool latex) {
    if (coeffs.empty()) return "0";
    std::string out;
    bool leading = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        out += term(coeffs[i], i, var, latex, leading);
        leading = false;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string Polynomial::to_string(const std::string& var) const {
    return render(coeffs_, var, false);
}

std::string Polynomial::to_latex(const std::string& var) const {
    return render(coeffs_, var, true);
}

}  // namespace faulhaber
