#include "faulhaber/combinatorics.hpp"

#include <mutex>

namespace faulhaber {

namespace {
std::mutex table_mutex;
}

Int factorial(unsigned n) {
    static std::vector<Int> table{1};
    std::lock_guard<std::mutex> lock(table_mutex);
    while (table.size() <= n) table.push_back(table.back() * Int(table.size()));
    return table[n];
}

Int double_factorial_odd(unsigned k) {
    Int result = 1;
    for (unsigned i = 1; i <= k; ++i) result *= 2 * i - 1;
    return result;
}

Int binomial(const Int& n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && Int(k) > n) return 0;
    // (n)_k / k!, dividing stepwise so every intermediate stays integral.
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - Int(k - i);
        result /= Int(i);
    }
    return result;
}

Rational falling_factorial(const Rational& x, unsigned m) {
    Rational result(1);
    for (unsigned i = 0; i < m; ++i) result *= x - Rational(Int(i));
    return result;
}

Polynomial falling_factorial(const Polynomial& p, unsigned m) {
    Polynomial result = Polynomial::constant(1);
    for (unsigned i = 0; i < m; ++i)
        result = result * (p - Polynomial::constant(Rational(Int(i))));
    return result;
}

Int stirling2(unsigned k, unsigned j) {
    if (j > k) return 0;
    static std::vector<std::vector<Int>> rows{{1}};  // rows[k][j]
    std::lock_guard<std::mutex> lock(table_mutex);
    while (rows.size() <= k) {
        const auto& prev = rows.back();
        unsigned kk = static_cast<unsigned>(rows.size());
        std::vector<Int> row(kk + 1);
        row[0] = 0;
        row[kk] = 1;
        for (unsigned jj = 1; jj < kk; ++jj)
            row[jj] = prev[jj - 1] + Int(jj) * prev[jj];
        rows.push_back(std::move(row));
    }
    return rows[k][j];
}

Int eulerian_number(unsigned j, unsigned i) {
    if (i < 1 || i > j) return 0;
    // <j,i> = i <j-1,i> + (j-i+1) <j-1,i-1>, with <1,1> = 1.
    static std::vector<std::vector<Int>> rows{{}, {1}};  // rows[j][i-1]
    std::lock_guard<std::mutex> lock(table_mutex);
    while (rows.size() <= j) {
        const auto& prev = rows.back();
        unsigned jj = static_cast<unsigned>(rows.size());
        std::vector<Int> row(jj);
        for (unsigned ii = 1; ii <= jj; ++ii) {
            Int left = ii <= prev.size() ? prev[ii - 1] : Int(0);
            Int right = (ii >= 2 && ii - 1 <= prev.size()) ? prev[ii - 2] : Int(0);
            row[ii - 1] = Int(ii) * left + Int(jj - ii + 1) * right;
        }
        rows.push_back(std::move(row));
    }
    return rows[j][i - 1];
}

Polynomial eulerian_polynomial(unsigned j) {
    if (j == 0) return Polynomial::constant(1);
    std::vector<Rational> coeffs(j + 1, Rational(0));
    for (unsigned i = 1; i <= j; ++i) coeffs[i] = Rational(eulerian_number(j, i));
    return Polynomial(std::move(coeffs));
}

namespace {

void enumerate_tuples(unsigned k, unsigned r, unsigned remaining, std::vector<unsigned>& parts,
                      std::vector<PartitionTuple>& out) {
    if (r == k) {
        parts[r - 1] = remaining / r;
        if (parts[r - 1] * r == remaining) out.push_back(PartitionTuple{parts});
        return;
    }
    for (unsigned b = 0; b * r <= remaining; ++b) {
        parts[r - 1] = b;
        enumerate_tuples(k, r + 1, remaining - b * r, parts, out);
    }
}

}  // namespace

std::vector<PartitionTuple> partition_tuples(unsigned k) {
    std::vector<PartitionTuple> out;
    if (k == 0) return out;
    std::vector<unsigned> parts(k, 0);
    // Iterating b_1 ascending first yields lexicographic order directly.
    enumerate_tuples(k, 1, k, parts, out);
    return out;
}

Rational faa_weight(unsigned k, const PartitionTuple& t) {
    Rational w(factorial(2 * k));
    for (unsigned r = 1; r <= k; ++r) {
        unsigned b = t.parts[r - 1];
        if (b == 0) continue;
        w /= Rational(factorial(b));
        w /= rpow(Rational(ipow(4, r) * factorial(2 * r)), b);
    }
    return w;
}

}  // namespace faulhaber
