#include "faulhaber/powersum.hpp"

#include <sstream>
#include <stdexcept>

#include "faulhaber/combinatorics.hpp"
#include "faulhaber/detail/linsolve.hpp"
#include "faulhaber/matrix.hpp"

namespace faulhaber {

Rational delta_const(unsigned k) {
    return Rational(factorial(k + 1), factorial(2 * k + 2) * ipow(2, k - 1));
}

Rational omega_const(unsigned k) {
    return Rational(1, factorial(k) * ipow(8, k));
}

Rational lambda_const(unsigned k) {
    return Rational(3 * factorial(k + 1), factorial(2 * k + 2) * ipow(2, k));
}

Int powersum_oracle(unsigned k, unsigned n) {
    Int s = 0;
    for (unsigned r = 1; r <= n; ++r) s += ipow(Int(r), k);
    return s;
}

std::vector<Int> theorem1_solve(Parity parity, unsigned k, unsigned n) {
    if (k < 1) throw std::invalid_argument("theorem1_solve requires k >= 1");
    const Rational N(2 * n + 1, 2);
    std::vector<Int> solved;
    solved.reserve(k);
    for (unsigned i = 1; i <= k; ++i) {
        Rational rhs = parity == Parity::Even
                           ? Rational(ipow(4, i)) * rpow(N, 2 * i + 1) - N
                           : Rational(ipow(4, i)) * rpow(N, 2 * i) - Rational(1);
        for (unsigned j = 1; j < i; ++j) {
            Int c = parity == Parity::Even ? binomial(2 * i + 1, 2 * j)
                                           : binomial(2 * i, 2 * j - 1);
            rhs -= Rational(ipow(4, j) * c) * Rational(solved[j - 1]);
        }
        Int diag = parity == Parity::Even ? binomial(2 * i + 1, 2 * i) : binomial(2 * i, 2 * i - 1);
        rhs /= Rational(ipow(4, i) * diag);
        if (!is_integer(rhs))
            throw std::logic_error("theorem1_solve: non-integral power sum (internal inconsistency)");
        solved.push_back(numerator(rhs));
    }
    return solved;
}

namespace {

// Signed cofactors of the last column of the k x k determinantal system:
// cof[i-1] multiplies the i-th last-column entry.
std::vector<Rational> last_column_cofactors(Parity parity, unsigned k) {
    std::vector<Rational> cof(k);
    if (k == 1) {
        cof[0] = 1;
        return cof;
    }
    ExactMatrix m(k);
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; j < k; ++j)
            m.at(i - 1, j - 1) = parity == Parity::Even
                                     ? Rational(binomial(2 * i + 1, 2 * j))
                                     : Rational(binomial(2 * i, 2 * j - 1));
    for (unsigned i = 1; i <= k; ++i) {
        Rational d = determinant(m.minor_matrix(i - 1, k - 1));
        cof[i - 1] = ((i + k) % 2 == 0) ? d : -d;
    }
    return cof;
}

// Last-column entry as a polynomial in the basis variable:
// (2N)^(2i) - 1 in N, or (1 + 8 S_1)^i - 1 in S_1.
Polynomial last_column_entry(Basis basis, unsigned i) {
    if (basis == Basis::N) {
        Polynomial p = Polynomial::monomial(2 * i, Rational(ipow(4, i)));
        return p - Polynomial::constant(1);
    }
    Polynomial base({Rational(1), Rational(8)});
    return base.pow(i) - Polynomial::constant(1);
}

}  // namespace

FaulhaberPolynomial faulhaber_poly(Parity parity, unsigned k, Basis basis) {
    if (k < 1) throw std::invalid_argument("faulhaber_poly requires k >= 1");
    std::vector<Rational> cof = last_column_cofactors(parity, k);
    Polynomial det;
    for (unsigned i = 1; i <= k; ++i)
        det = det + last_column_entry(basis, i) * cof[i - 1];

    FaulhaberPolynomial fp;
    fp.parity = parity;
    fp.basis = basis;
    fp.k = k;
    if (basis == Basis::N) {
        fp.multiplier = FaulhaberPolynomial::Multiplier::None;
        fp.body = parity == Parity::Even ? (det * delta_const(k)).shifted_up(1)
                                         : det * omega_const(k);
        return fp;
    }
    if (parity == Parity::Even) {
        // S_2k = S_2 * (Lambda_k det / S_1); the determinant has no
        // constant term, so the division is a plain shift.
        fp.multiplier = FaulhaberPolynomial::Multiplier::S2;
        fp.body = (det * lambda_const(k)).shifted_down(1);
    } else if (k == 1) {
        fp.multiplier = FaulhaberPolynomial::Multiplier::S1;
        fp.body = (det * omega_const(k)).shifted_down(1);  // S_1 itself
    } else {
        fp.multiplier = FaulhaberPolynomial::Multiplier::S1Squared;
        fp.body = (det * omega_const(k)).shifted_down(2);
    }
    return fp;
}

Rational eval_faulhaber(const FaulhaberPolynomial& fp, unsigned n) {
    if (fp.basis == Basis::N) return fp.body.eval(Rational(2 * n + 1, 2));
    const Rational s1(Int(n) * (n + 1), 2);
    const Rational s2(Int(n) * (n + 1) * (2 * n + 1), 6);
    Rational inner = fp.body.eval(s1);
    switch (fp.multiplier) {
        case FaulhaberPolynomial::Multiplier::S2: return s2 * inner;
        case FaulhaberPolynomial::Multiplier::S1: return s1 * inner;
        case FaulhaberPolynomial::Multiplier::S1Squared: return s1 * s1 * inner;
        case FaulhaberPolynomial::Multiplier::None: break;
    }
    return inner;
}

Polynomial q_polynomial(unsigned k, unsigned n, QForm form) {
    const Polynomial x = Polynomial::monomial(1);
    const Polynomial one_minus_x({Rational(1), Rational(-1)});
    if (form == QForm::Stirling) {
        Polynomial q;
        for (unsigned j = 0; j <= k; ++j) {
            Int w = factorial(j) * stirling2(k, j);
            if (w == 0) continue;
            Polynomial inner = Polynomial::monomial(j) * one_minus_x.pow(k - j);
            Polynomial tail;
            for (unsigned r = 0; r <= j; ++r)
                tail = tail + Polynomial::monomial(r, Rational(binomial(n + 1, j - r))) *
                                  one_minus_x.pow(k - r);
            q = q + (inner - tail.shifted_up(n + 1)) * Rational(w);
        }
        return q;
    }
    Polynomial q = eulerian_polynomial(k);
    Polynomial tail;
    for (unsigned j = 0; j <= k; ++j)
        tail = tail + eulerian_polynomial(k - j) * one_minus_x.pow(j) *
                          Rational(binomial(k, j) * ipow(n + 1, j));
    return q - tail.shifted_up(n + 1);
}

Int powersum_via_q(unsigned k, unsigned n, QForm form) {
    Polynomial q = q_polynomial(k, n, form);
    Rational v = q.derivative(k + 1).eval(1) / Rational(factorial(k + 1));
    if (k % 2 == 0) v = -v;  // (-1)^(k+1)
    return to_integer(v);
}

Int powersum_via_operator(unsigned k, unsigned n) {
    return to_integer(Polynomial::geometric(n).xddx(k).eval(1));
}

Int powersum_via_stirling(unsigned k, unsigned n) {
    const Polynomial g = Polynomial::geometric(n);
    Rational s(0);
    for (unsigned j = 1; j <= k; ++j)
        s += Rational(stirling2(k, j)) * g.derivative(j).eval(1);
    return to_integer(s);
}

Polynomial pk_polynomial(unsigned k) {
    const Polynomial two_j = Polynomial::monomial(1, Rational(2));
    Polynomial p;
    for (const auto& t : partition_tuples(k))
        p = p + falling_factorial(two_j, t.m()) * faa_weight(k, t);
    return p * Rational(ipow(2, k));
}

Int exotic_powersum(unsigned k, unsigned n) {
    const Polynomial p = pk_polynomial(k);
    Rational s(0);
    for (unsigned j = 1; j <= n; ++j) {
        Rational term = Rational(ipow(4, j) * binomial(n + j, 2 * j)) * p.eval(Rational(j));
        s += ((n + j) % 2 == 0) ? term : -term;
    }
    return to_integer(s / Rational(ipow(2, k + 1)));
}

std::array<Int, 3> doubling_identities(unsigned k, unsigned n) {
    const Int nn(n);
    Int a = (2 * nn + 1) * ipow(nn, 2 * k - 1);
    for (unsigned j = 1; j + 1 <= k; ++j)
        a += 2 * binomial(2 * k - 1, 2 * j) * powersum_oracle(2 * j, n) * ipow(nn, 2 * k - 2 * j - 1);

    Int b = 2 * powersum_oracle(2 * k - 1, n) + ipow(nn, 2 * k);
    for (unsigned j = 1; j <= 2 * k - 2; ++j)
        b += binomial(2 * k - 1, j) * powersum_oracle(j, n) * ipow(nn, 2 * k - 1 - j);

    Int c = 4 * powersum_oracle(2 * k - 1, n) - ipow(nn, 2 * k - 1);
    for (unsigned j = 1; j + 1 <= k; ++j)
        c += 2 * binomial(2 * k - 1, 2 * j - 1) * powersum_oracle(2 * j - 1, n) * ipow(nn, 2 * k - 2 * j);

    return {a, b, c};
}

namespace {

Int alternating_power_rhs(unsigned k, unsigned n) {
    Int s = 0;
    for (unsigned j = 1; j <= n; ++j) {
        Int term = ipow(4, j) * ipow(Int(j), k) * binomial(n + j, 2 * j);
        s += ((n + j) % 2 == 0) ? term : -term;
    }
    return s;
}

}  // namespace

std::vector<Rational> fitted_recurrence_coefficients(unsigned k) {
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    std::vector<Rational> rhs(k);
    for (unsigned n = 1; n <= k; ++n) {
        for (unsigned r = 1; r <= k; ++r) m[n - 1][r - 1] = Rational(powersum_oracle(2 * r, n));
        rhs[n - 1] = Rational(alternating_power_rhs(k, n));
    }
    return detail::solve_linear(std::move(m), std::move(rhs));
}

IdentityReport verify_identities(unsigned k, unsigned n) {
    IdentityReport rep;
    std::ostringstream detail;

    Rational num(0), den(0);
    for (unsigned j = 1; j <= k; ++j) {
        num += Rational(ipow(4, j) * binomial(2 * k + 1, 2 * j) * powersum_oracle(2 * j, n));
        den += Rational(ipow(4, j) * binomial(2 * k, 2 * j - 1) * powersum_oracle(2 * j - 1, n));
    }
    rep.remark2_ok = den != 0 && num / den == Rational(2 * n + 1, 2);
    if (!rep.remark2_ok) detail << "remark2 ratio failed at (k=" << k << ", n=" << n << "); ";

    Int chen_even(0), chen_odd(0);
    for (unsigned j = 1; j <= k; ++j) {
        chen_even += binomial(2 * k + 1, 2 * j) * powersum_oracle(2 * j, n);
        chen_odd += binomial(2 * k, 2 * j - 1) * powersum_oracle(2 * j - 1, n);
    }
    Int np1 = Int(n) + 1;
    rep.chen_even_ok =
        2 * chen_even == ipow(np1, 2 * k + 1) + ipow(Int(n), 2 * k + 1) - 2 * Int(n) - 1;
    rep.chen_odd_ok = 2 * chen_odd == ipow(np1, 2 * k) + ipow(Int(n), 2 * k) - 1;
    if (!rep.chen_even_ok) detail << "chen even recurrence failed at (k=" << k << ", n=" << n << "); ";
    if (!rep.chen_odd_ok) detail << "chen odd recurrence failed at (k=" << k << ", n=" << n << "); ";

    // Fit from n = 1..k, then overdetermination check at five more points.
    std::vector<Rational> c = fitted_recurrence_coefficients(k);
    Rational csum(0);
    for (const auto& ci : c) csum += ci;
    rep.fitted_recurrence_ok = csum == 4;
    for (unsigned nv = k + 1; rep.fitted_recurrence_ok && nv <= k + 5; ++nv) {
        Rational lhs(0);
        for (unsigned r = 1; r <= k; ++r) lhs += c[r - 1] * Rational(powersum_oracle(2 * r, nv));
        rep.fitted_recurrence_ok = lhs == Rational(alternating_power_rhs(k, nv));
    }
    if (!rep.fitted_recurrence_ok) detail << "fitted recurrence failed at k=" << k << "; ";

    rep.detail = detail.str();
    return rep;
}

}  // namespace faulhaber
