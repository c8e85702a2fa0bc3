#include "faulhaber/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "faulhaber/arithprog.hpp"
#include "faulhaber/bernoulli.hpp"
#include "faulhaber/chebyshev.hpp"
#include "faulhaber/powersum.hpp"
#include "faulhaber/series.hpp"

namespace faulhaber::cli {

namespace {

using nlohmann::json;

std::string latex_rational(const Rational& r) {
    Rational a = r < 0 ? Rational(-r) : r;
    std::string body = is_integer(a)
                           ? numerator(a).str()
                           : "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}";
    return (r < 0 ? "-" : "") + body;
}

Int power_sum_by_method(const std::string& method, unsigned k, unsigned n) {
    if (method == "oracle") return powersum_oracle(k, n);
    if (method == "series") return powersum_from_egf(k, n, EgfRoute::Met1Division);
    if (k < 1) throw CLI::ValidationError("--k", "method '" + method + "' requires k >= 1");
    if (method == "recurrence") {
        Parity parity = k % 2 == 0 ? Parity::Even : Parity::Odd;
        return theorem1_solve(parity, (k + 1) / 2, n).back();
    }
    if (method == "det") {
        Parity parity = k % 2 == 0 ? Parity::Even : Parity::Odd;
        return to_integer(eval_faulhaber(faulhaber_poly(parity, (k + 1) / 2, Basis::N), n));
    }
    if (method == "faa")
        return k % 2 == 0 ? faa_even(k / 2, n) : faa_odd((k + 1) / 2, n);
    if (method == "chebyshev") return powersum_via_chebyshev_series(k, n);
    if (method == "operator") return powersum_via_operator(k, n);
    if (method == "stirling") return powersum_via_stirling(k, n);
    if (method == "eulerian") return powersum_via_q(k, n, QForm::Eulerian);
    if (method == "exotic") {
        if (k % 2 != 0)
            throw CLI::ValidationError("--method", "the exotic formula covers even k only");
        return exotic_powersum(k / 2, n);
    }
    throw CLI::ValidationError("--method", "unknown method '" + method + "'");
}

void emit_value(std::ostream& out, const std::string& format, const std::string& method,
                unsigned k, unsigned n, const Int& v) {
    if (format == "json") {
        json j{{"verb", "value"},
               {"params", {{"k", k}, {"n", n}, {"method", method}}},
               {"result", v.str()}};
        out << j.dump() << "\n";
    } else if (format == "csv") {
        out << "method,k,n,value\n" << method << "," << k << "," << n << "," << v << "\n";
    } else if (format == "latex") {
        out << "S_{" << k << "}(" << n << ") = " << v << "\n";
    } else {
        out << v << "\n";
    }
}

void emit_bernoulli(std::ostream& out, const std::string& format, const std::string& method,
                    unsigned k, const Rational& v) {
    if (format == "json") {
        json j{{"verb", "bernoulli"},
               {"params", {{"k", k}, {"method", method}}},
               {"result", to_fraction_string(v)}};
        out << j.dump() << "\n";
    } else if (format == "csv") {
        out << "method,k,n,value\n" << method << "," << k << ",," << to_fraction_string(v) << "\n";
    } else if (format == "latex") {
        out << "B_{" << 2 * k << "} = " << latex_rational(v) << "\n";
    } else {
        out << to_fraction_string(v) << "\n";
    }
}

std::string multiplier_label(const FaulhaberPolynomial& fp) {
    switch (fp.multiplier) {
        case FaulhaberPolynomial::Multiplier::S2: return "S_2";
        case FaulhaberPolynomial::Multiplier::S1: return "S_1";
        case FaulhaberPolynomial::Multiplier::S1Squared: return "S_1^2";
        case FaulhaberPolynomial::Multiplier::None: break;
    }
    return "";
}

void emit_poly(std::ostream& out, const std::string& format, const FaulhaberPolynomial& fp) {
    const bool n_basis = fp.basis == Basis::N;
    const std::string var = n_basis ? "N" : "S_1";
    const std::string mult = multiplier_label(fp);
    if (format == "json") {
        json coeffs = json::array();
        for (const auto& c : fp.body.coefficients()) coeffs.push_back(to_fraction_string(c));
        json result{{"coeffs", coeffs}, {"basis", n_basis ? "N" : "S1"}};
        if (!mult.empty()) result["multiplier"] = mult;
        json j{{"verb", "poly"},
               {"params",
                {{"k", fp.k},
                 {"parity", fp.parity == Parity::Even ? "even" : "odd"},
                 {"basis", n_basis ? "N" : "S1"}}},
               {"result", result}};
        out << j.dump() << "\n";
    } else if (format == "csv") {
        out << "degree,coefficient\n";
        for (std::size_t i = 0; i < fp.body.coefficients().size(); ++i)
            out << i << "," << to_fraction_string(fp.body.coeff(i)) << "\n";
    } else if (format == "latex") {
        unsigned idx = fp.parity == Parity::Even ? 2 * fp.k : 2 * fp.k - 1;
        out << "S_{" << idx << "} = ";
        if (mult.empty())
            out << fp.body.to_latex(var) << "\n";
        else
            out << mult << " \\left( " << fp.body.to_latex(var) << " \\right)\n";
    } else {
        if (mult.empty())
            out << fp.body.to_string(var) << "\n";
        else
            out << mult << "*(" << fp.body.to_string(var) << ")\n";
    }
}

void emit_ap(std::ostream& out, const std::string& format, const std::string& method, unsigned k,
             const APParams& p, const Int& v) {
    if (format == "json") {
        json j{{"verb", "ap"},
               {"params",
                {{"k", k}, {"a", p.a.str()}, {"d", p.d.str()}, {"n", p.n}, {"method", method}}},
               {"result", v.str()}};
        out << j.dump() << "\n";
    } else if (format == "csv") {
        out << "method,k,n,value\n" << method << "," << k << "," << p.n << "," << v << "\n";
    } else if (format == "latex") {
        out << "S_{" << k << "}^{" << p.a << "," << p.d << "}(" << p.n << ") = " << v << "\n";
    } else {
        out << v << "\n";
    }
}

struct Mismatch {
    std::string method;
    unsigned k, n;
    Int expected, got;
};

int run_verify(std::ostream& out, const std::string& format, unsigned max_k, unsigned max_n) {
    std::vector<Mismatch> mismatches;
    auto check = [&](const char* method, unsigned k, unsigned n, const Int& expected,
                     const Int& got) {
        if (got != expected) mismatches.push_back({method, k, n, expected, got});
    };
    for (unsigned k = 1; k <= max_k; ++k) {
        for (unsigned n = 1; n <= max_n; ++n) {
            const Int expected = powersum_oracle(k, n);
            Parity parity = k % 2 == 0 ? Parity::Even : Parity::Odd;
            unsigned kk = (k + 1) / 2;
            check("recurrence", k, n, expected, theorem1_solve(parity, kk, n).back());
            check("det-N", k, n, expected,
                  to_integer(eval_faulhaber(faulhaber_poly(parity, kk, Basis::N), n)));
            check("det-S1", k, n, expected,
                  to_integer(eval_faulhaber(faulhaber_poly(parity, kk, Basis::S1), n)));
            check("q-stirling", k, n, expected, powersum_via_q(k, n, QForm::Stirling));
            check("q-eulerian", k, n, expected, powersum_via_q(k, n, QForm::Eulerian));
            check("operator", k, n, expected, powersum_via_operator(k, n));
            check("stirling", k, n, expected, powersum_via_stirling(k, n));
            check("egf-sum", k, n, expected, powersum_from_egf(k, n, EgfRoute::DirectSum));
            check("egf-div", k, n, expected, powersum_from_egf(k, n, EgfRoute::Met1Division));
            check("chebyshev", k, n, expected, powersum_via_chebyshev_series(k, n));
            check("faa", k, n, expected, k % 2 == 0 ? faa_even(kk, n) : faa_odd(kk, n));
            if (k % 2 == 0) check("exotic", k, n, expected, exotic_powersum(kk, n));
        }
    }
    if (format == "csv" || !mismatches.empty()) out << "method,k,n,expected,got\n";
    for (const auto& m : mismatches)
        out << m.method << "," << m.k << "," << m.n << "," << m.expected << "," << m.got << "\n";
    if (mismatches.empty()) {
        if (format != "csv")
            out << "verify: all methods agree for k <= " << max_k << ", n <= " << max_n << "\n";
        return 0;
    }
    out << "verify: " << mismatches.size() << " mismatch(es)\n";
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact power-sum, Faulhaber-polynomial, and Bernoulli-number calculator"};
    app.require_subcommand(1);

    std::string format = "plain";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv", "latex"}))
        ->capture_default_str();

    // value
    auto* value_cmd = app.add_subcommand("value", "Compute S_k(n) by a chosen method");
    unsigned v_k = 0, v_n = 0;
    std::string v_method = "oracle";
    value_cmd->add_option("--k", v_k, "Power index")->required();
    value_cmd->add_option("--n", v_n, "Number of terms")->required()->check(CLI::PositiveNumber);
    value_cmd->add_option("--method", v_method, "Computation route")
        ->check(CLI::IsMember({"oracle", "recurrence", "det", "faa", "chebyshev", "operator",
                               "stirling", "eulerian", "series", "exotic"}));

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "Print a Faulhaber polynomial");
    unsigned p_k = 0;
    std::string p_parity, p_basis;
    poly_cmd->add_option("--k", p_k, "Half-index k (S_2k or S_2k-1)")
        ->required()
        ->check(CLI::PositiveNumber);
    poly_cmd->add_option("--parity", p_parity, "even (S_2k) or odd (S_2k-1)")
        ->required()
        ->check(CLI::IsMember({"even", "odd"}));
    poly_cmd->add_option("--basis", p_basis, "Basis variable")
        ->required()
        ->check(CLI::IsMember({"N", "S1"}));

    // bernoulli
    auto* ber_cmd = app.add_subcommand("bernoulli", "Compute B_2k");
    unsigned b_k = 0;
    std::string b_method = "det";
    ber_cmd->add_option("--k", b_k, "Half-index k (B_2k)")->required()->check(CLI::PositiveNumber);
    ber_cmd->add_option("--method", b_method, "Computation route")
        ->check(CLI::IsMember({"det", "vanmalderen", "faulhaber", "oracle"}));

    // ap
    auto* ap_cmd = app.add_subcommand("ap", "Power sum over an arithmetic progression");
    unsigned a_k = 0, a_n = 0;
    long long a_a = 0, a_d = 1;
    std::string a_method = "oracle";
    ap_cmd->add_option("--k", a_k, "Power index")->required();
    ap_cmd->add_option("--a", a_a, "Initial term")->required()->check(CLI::NonNegativeNumber);
    ap_cmd->add_option("--d", a_d, "Common difference")->required()->check(CLI::PositiveNumber);
    ap_cmd->add_option("--n", a_n, "Number of terms")->required()->check(CLI::PositiveNumber);
    ap_cmd->add_option("--method", a_method, "Computation route")
        ->check(CLI::IsMember({"oracle", "series", "met9"}));

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "Cross-validate every method");
    unsigned max_k = 10, max_n = 20;
    ver_cmd->add_option("--max-k", max_k, "Largest power index")->check(CLI::PositiveNumber);
    ver_cmd->add_option("--max-n", max_n, "Largest term count")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (value_cmd->parsed()) {
            emit_value(out, format, v_method, v_k, v_n,
                       power_sum_by_method(v_method, v_k, v_n));
        } else if (poly_cmd->parsed()) {
            emit_poly(out, format,
                      faulhaber_poly(p_parity == "even" ? Parity::Even : Parity::Odd, p_k,
                                     p_basis == "N" ? Basis::N : Basis::S1));
        } else if (ber_cmd->parsed()) {
            Rational v;
            if (b_method == "det") v = bernoulli_det(b_k);
            else if (b_method == "vanmalderen") v = bernoulli_vanmalderen(b_k);
            else if (b_method == "faulhaber") v = bernoulli_from_faulhaber(b_k);
            else v = bernoulli_oracle(2 * b_k);
            emit_bernoulli(out, format, b_method, b_k, v);
        } else if (ap_cmd->parsed()) {
            APParams p{Int(a_a), Int(a_d), a_n};
            Int v;
            if (a_method == "oracle") v = ap_oracle(a_k, p);
            else if (a_method == "series") v = ap_series(a_k, p);
            else v = ap_met9(a_k, p);
            emit_ap(out, format, a_method, a_k, p, v);
        } else if (ver_cmd->parsed()) {
            return run_verify(out, format, max_k, max_n);
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace faulhaber::cli
