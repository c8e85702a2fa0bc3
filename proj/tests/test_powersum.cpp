#include <doctest.h>

#include "faulhaber/combinatorics.hpp"
#include "faulhaber/powersum.hpp"

using namespace faulhaber;

namespace {

Polynomial from_coeffs(std::vector<Rational> c) { return Polynomial(std::move(c)); }

}  // namespace

TEST_CASE("powersum_oracle") {
    CHECK(powersum_oracle(0, 7) == 7);
    CHECK(powersum_oracle(3, 4) == 100);
    CHECK(powersum_oracle(10, 4) == 1108650);
}

TEST_CASE("determinantal constants") {
    CHECK(delta_const(1) == Rational(1, 12));
    CHECK(delta_const(5) == Rational(1, 10644480));
    CHECK(omega_const(1) == Rational(1, 8));
    CHECK(omega_const(5) == Rational(1, 3932160));
    CHECK(lambda_const(5) == Rational(1, 7096320));
}

TEST_CASE("theorem1_solve") {
    // even, k=1, n=3: 12 S_2 = 4 (7/2)^3 - 7/2
    auto even = theorem1_solve(Parity::Even, 1, 3);
    REQUIRE(even.size() == 1);
    CHECK(even[0] == 14);

    // odd, k=1: 8 S_1 = 4 N^2 - 1 gives the triangular numbers
    for (unsigned n = 1; n <= 10; ++n) {
        auto odd = theorem1_solve(Parity::Odd, 1, n);
        REQUIRE(odd.size() == 1);
        CHECK(odd[0] == Int(n) * (n + 1) / 2);
    }

    // whole prefixes match the oracle
    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned n = 1; n <= 8; ++n) {
            auto e = theorem1_solve(Parity::Even, k, n);
            auto o = theorem1_solve(Parity::Odd, k, n);
            REQUIRE(e.size() == k);
            REQUIRE(o.size() == k);
            for (unsigned j = 1; j <= k; ++j) {
                CHECK(e[j - 1] == powersum_oracle(2 * j, n));
                CHECK(o[j - 1] == powersum_oracle(2 * j - 1, n));
            }
        }
}

TEST_CASE("Faulhaber polynomials in N reproduce the worked displays") {
    auto s2 = faulhaber_poly(Parity::Even, 1, Basis::N);
    CHECK(s2.body == from_coeffs({0, Rational(-1, 12), 0, Rational(1, 3)}));

    auto s10 = faulhaber_poly(Parity::Even, 5, Basis::N);
    CHECK(s10.body == from_coeffs({0, Rational(-2555, 33792), 0, Rational(127, 256), 0,
                                   Rational(-31, 32), 0, Rational(7, 8), 0, Rational(-5, 12),
                                   0, Rational(1, 11)}));

    auto s9 = faulhaber_poly(Parity::Odd, 5, Basis::N);
    CHECK(s9.body == from_coeffs({Rational(-31, 2048), 0, Rational(381, 2560), 0,
                                  Rational(-31, 64), 0, Rational(49, 80), 0, Rational(-3, 8),
                                  0, Rational(1, 10)}));
}

TEST_CASE("Faulhaber polynomials in the S_1 basis") {
    auto s10 = faulhaber_poly(Parity::Even, 5, Basis::S1);
    CHECK(s10.multiplier == FaulhaberPolynomial::Multiplier::S2);
    CHECK(s10.body == from_coeffs({Rational(5, 11), Rational(-30, 11), Rational(68, 11),
                                   Rational(-80, 11), Rational(48, 11)}));

    auto s9 = faulhaber_poly(Parity::Odd, 5, Basis::S1);
    CHECK(s9.multiplier == FaulhaberPolynomial::Multiplier::S1Squared);
    CHECK(s9.body == from_coeffs({Rational(-3, 5), Rational(12, 5), Rational(-4),
                                  Rational(16, 5)}));

    // k = 1 odd has no S_1^2 form; it is S_1 itself.
    auto s1 = faulhaber_poly(Parity::Odd, 1, Basis::S1);
    CHECK(s1.multiplier == FaulhaberPolynomial::Multiplier::S1);
    CHECK(s1.body == Polynomial::constant(1));
}

TEST_CASE("eval_faulhaber") {
    CHECK(eval_faulhaber(faulhaber_poly(Parity::Even, 5, Basis::N), 2) == 1025);
    CHECK(eval_faulhaber(faulhaber_poly(Parity::Odd, 1, Basis::N), 1) == 1);
    CHECK(eval_faulhaber(faulhaber_poly(Parity::Odd, 5, Basis::S1), 3) == 20196);

    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned n = 1; n <= 8; ++n)
            for (Basis basis : {Basis::N, Basis::S1}) {
                CHECK(eval_faulhaber(faulhaber_poly(Parity::Even, k, basis), n) ==
                      Rational(powersum_oracle(2 * k, n)));
                CHECK(eval_faulhaber(faulhaber_poly(Parity::Odd, k, basis), n) ==
                      Rational(powersum_oracle(2 * k - 1, n)));
            }
}

TEST_CASE("Faulhaber parity structure") {
    for (unsigned k = 1; k <= 10; ++k) {
        auto even = faulhaber_poly(Parity::Even, k, Basis::N);
        CHECK(even.body.degree() == 2 * static_cast<long>(k) + 1);
        for (std::size_t i = 0; i <= static_cast<std::size_t>(even.body.degree()); i += 2)
            CHECK(even.body.coeff(i) == 0);

        auto odd = faulhaber_poly(Parity::Odd, k, Basis::N);
        CHECK(odd.body.degree() == 2 * static_cast<long>(k));
        for (std::size_t i = 1; i <= static_cast<std::size_t>(odd.body.degree()); i += 2)
            CHECK(odd.body.coeff(i) == 0);
    }
}

TEST_CASE("derivative of the odd-index polynomial vanishes at n = 0") {
    for (unsigned k = 2; k <= 10; ++k) {
        auto odd = faulhaber_poly(Parity::Odd, k, Basis::N);
        CHECK(odd.body.derivative().eval(Rational(1, 2)) == 0);  // dN/dn = 1
    }
}

TEST_CASE("q_polynomial") {
    // Q_n(x;2) = x + x^2 - (n+1)^2 x^{n+1} + (2n^2+2n-1) x^{n+2} - n^2 x^{n+3}
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<Rational> c(n + 4, Rational(0));
        c[1] += 1;
        c[2] += 1;
        c[n + 1] += -Rational(Int(n) + 1) * (Int(n) + 1);
        c[n + 2] += Rational(2 * Int(n) * n + 2 * Int(n) - 1);
        c[n + 3] += -Rational(Int(n) * n);
        CHECK(q_polynomial(2, n, QForm::Stirling) == Polynomial(c));
        CHECK(q_polynomial(2, n, QForm::Eulerian) == Polynomial(c));
    }

    CHECK(q_polynomial(3, 2, QForm::Stirling) == q_polynomial(3, 2, QForm::Eulerian));
    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned n = 1; n <= 6; ++n) {
            auto q = q_polynomial(k, n, QForm::Stirling);
            CHECK(q == q_polynomial(k, n, QForm::Eulerian));
            CHECK(q.degree() == static_cast<long>(n + k + 1));
            if (k <= 5 && n <= 5) CHECK(q.eval(1) == 0);
        }
}

TEST_CASE("powersum_via_q") {
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(powersum_via_q(2, n) == Int(n) * (n + 1) * (2 * Int(n) + 1) / 6);
    CHECK(powersum_via_q(1, 4) == 10);
    CHECK(powersum_via_q(5, 3) == 276);
    CHECK(powersum_via_q(5, 3, QForm::Eulerian) == 276);
}

TEST_CASE("powersum_via_operator") {
    CHECK(powersum_via_operator(1, 3) == 6);
    CHECK(powersum_via_operator(4, 3) == 98);
    CHECK(powersum_via_operator(2, 5) == 55);
}

TEST_CASE("powersum_via_stirling") {
    CHECK(powersum_via_stirling(1, 2) == 3);
    CHECK(powersum_via_stirling(6, 4) == 4890);
    // k = 3: the three Stirling terms recombine into n^2 (n+1)^2 / 4.
    for (unsigned n = 2; n <= 6; ++n) {
        Polynomial g = Polynomial::geometric(n);
        Rational total = 0;
        for (unsigned j = 1; j <= 3; ++j)
            total += Rational(stirling2(3, j)) * g.derivative(j).eval(1);
        CHECK(total == Rational(Int(n) * n * (Int(n) + 1) * (Int(n) + 1), 4));
        CHECK(powersum_via_stirling(3, n) == to_integer(total));
    }
}

TEST_CASE("pk_polynomial") {
    CHECK(pk_polynomial(1) == Polynomial{Rational(0), Rational(1)});
    CHECK(pk_polynomial(5) == from_coeffs({0, 496, -2370, 4095, -3150, 945}));
    for (unsigned k = 1; k <= 8; ++k) {
        auto p = pk_polynomial(k);
        CHECK(p.coeff(0) == 0);
        CHECK(p.degree() == static_cast<long>(k));
        CHECK(p.coeff(k) == Rational(double_factorial_odd(k)));
        CHECK(p.eval(1) == Rational(ipow(2, k - 1)));  // coefficient sum
    }
}

TEST_CASE("exotic_powersum") {
    CHECK(exotic_powersum(1, 2) == 5);  // (-12 + 32) / 4
    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned n = 1; n <= 10; ++n)
            CHECK(exotic_powersum(k, n) == powersum_oracle(2 * k, n));
}

TEST_CASE("doubling identities") {
    for (unsigned n = 1; n <= 10; ++n) {
        auto r = doubling_identities(1, n);
        CHECK(r[0] == (2 * Int(n) + 1) * n);
    }
    CHECK(doubling_identities(2, 3)[0] == 441);
    CHECK(doubling_identities(2, 3)[1] == 441);
    CHECK(doubling_identities(2, 3)[2] == 441);

    // k = 5 worked expansion: S_9(2n) = (2n+1)n^9 + 72n^7 S_2 + 252n^5 S_4
    //                                   + 168n^3 S_6 + 18n S_8
    for (unsigned n = 1; n <= 6; ++n) {
        Int expected = (2 * Int(n) + 1) * ipow(Int(n), 9) +
                       72 * ipow(Int(n), 7) * powersum_oracle(2, n) +
                       252 * ipow(Int(n), 5) * powersum_oracle(4, n) +
                       168 * ipow(Int(n), 3) * powersum_oracle(6, n) +
                       18 * Int(n) * powersum_oracle(8, n);
        CHECK(doubling_identities(5, n)[0] == expected);
        CHECK(expected == powersum_oracle(9, 2 * n));
    }

    for (unsigned k = 1; k <= 5; ++k)
        for (unsigned n = 1; n <= 6; ++n) {
            Int expected = powersum_oracle(2 * k - 1, 2 * n);
            auto r = doubling_identities(k, n);
            CHECK(r[0] == expected);
            CHECK(r[1] == expected);
            CHECK(r[2] == expected);
        }
}

TEST_CASE("fitted recurrence coefficients") {
    auto c1 = fitted_recurrence_coefficients(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == 4);
    for (unsigned k = 1; k <= 6; ++k) {
        auto c = fitted_recurrence_coefficients(k);
        Rational sum = 0;
        for (const auto& v : c) sum += v;
        CHECK(sum == 4);
    }
}

TEST_CASE("verify_identities") {
    // Remark 2 instance: the weighted ratio equals 2n+1 (3 at n = 1).
    {
        unsigned n = 1;
        Rational num = 9 * Rational(powersum_oracle(2, n)) +
                       126 * Rational(powersum_oracle(4, n)) +
                       336 * Rational(powersum_oracle(6, n)) +
                       144 * Rational(powersum_oracle(8, n));
        Rational den = Rational(powersum_oracle(1, n)) +
                       28 * Rational(powersum_oracle(3, n)) +
                       112 * Rational(powersum_oracle(5, n)) +
                       64 * Rational(powersum_oracle(7, n));
        CHECK(num / den == 3);
    }

    // Chen even instance at k=1, n=2: 3 S_2 = (27 + 8 - 5) / 2 = 15.
    CHECK(3 * powersum_oracle(2, 2) == 15);

    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned n = 1; n <= 8; ++n) {
            auto report = verify_identities(k, n);
            INFO(report.detail);
            CHECK(report.all_ok());
        }
}
