// Command-line front end: exact adele arithmetic, Haar integrals, the
// Fourier transform on test functions, and the Dirichlet-series evaluators.
// Exit codes: 0 success, 2 usage error, 3 domain/precision error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adele/dirichlet.hpp"
#include "adele/errors.hpp"
#include "adele/harmonic.hpp"
#include "adele/padic.hpp"
#include "adele/schwartz.hpp"

using namespace adele;
using nlohmann::json;

namespace {

long table_ceiling() {
    if (const char* env = std::getenv("ADELE_TABLE_CEILING")) {
        try {
            return std::stol(env);
        } catch (const std::exception&) {
            throw parse_error(std::string("bad ADELE_TABLE_CEILING: ") + env);
        }
    }
    return RadixTable::kDefaultCeiling;
}

// Adele literal: a digit string when it carries '|', otherwise a rational
// embedded at the given precision.
FiniteAdele parse_adele(const RadixTable& table, const std::string& text, long precision) {
    if (text.find('|') != std::string::npos) return FiniteAdele::parse(text);
    return FiniteAdele::from_rational(table, parse_rational(text), precision);
}

long parse_long(const std::string& text) {
    try {
        size_t used = 0;
        const long v = std::stol(text, &used);
        if (used != text.size()) throw parse_error("bad integer: " + text);
        return v;
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("bad integer: " + text);
    }
}

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return Complex(std::stod(text), 0.0);
        return Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw parse_error("bad complex literal (expected RE or RE,IM): " + text);
    }
}

std::vector<long> tuple_positions(long support, long constancy) {
    std::vector<long> out;
    for (long pos = -support; pos < -constancy; ++pos) out.push_back(pos);
    return out;
}

TestFunction load_function(const RadixTable& table, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    if (!doc.contains("support_k") || !doc.contains("constancy_l"))
        throw parse_error(path + ": missing support_k/constancy_l");
    const long k = doc["support_k"].get<long>();
    const long l = doc["constancy_l"].get<long>();
    const auto positions = tuple_positions(k, l);
    std::vector<Complex> coeffs(static_cast<size_t>(dimension(table, k, l)), Complex(0));
    for (const json& entry : doc.value("coeffs", json::array())) {
        const auto rep = entry.at("rep").get<std::vector<long>>();
        if (rep.size() != positions.size())
            throw parse_error(path + ": rep length must be " + std::to_string(positions.size()));
        long index = 0;
        for (size_t i = 0; i < rep.size(); ++i) {
            const long r = table.radix(positions[i]);
            if (rep[i] < 0 || rep[i] >= r) throw parse_error(path + ": digit out of range");
            index = index * r + rep[i];
        }
        coeffs[static_cast<size_t>(index)] =
            Complex(entry.value("re", 0.0), entry.value("im", 0.0));
    }
    return TestFunction(table, k, l, std::move(coeffs));
}

json dump_function(const RadixTable& table, const TestFunction& f) {
    const auto positions = tuple_positions(f.support(), f.constancy());
    json coeffs = json::array();
    for (size_t index = 0; index < f.coeffs().size(); ++index) {
        std::vector<long> rep(positions.size(), 0);
        long rest = static_cast<long>(index);
        for (size_t i = positions.size(); i-- > 0;) {
            const long r = table.radix(positions[i]);
            rep[i] = rest % r;
            rest /= r;
        }
        const Complex c = f.coeffs()[index];
        coeffs.push_back({{"rep", rep}, {"re", c.real()}, {"im", c.imag()}});
    }
    return {{"support_k", f.support()}, {"constancy_l", f.constancy()}, {"coeffs", coeffs}};
}

std::string padic_string(const PadicApprox& a) {
    if (a.is_zero_to_precision()) return "zero|" + std::to_string(a.precision());
    std::string out = std::to_string(a.valuation()) + ":";
    for (size_t i = 0; i < a.digits().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.digits()[i]);
    }
    return out + "|" + std::to_string(a.precision());
}

json series_json(const SeriesResult& r) {
    return {{"value_re", r.value.real()},
            {"value_im", r.value.imag()},
            {"tail_bound", r.tail_bound},
            {"terms", r.terms_used}};
}

int selftest(const RadixTable& table) {
    int bad = 0;
    const auto check = [&bad](const char* name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++bad;
    };

    const long goldens[] = {1, 2, 6, 12, 60, 420, 840, 2520, 27720};
    bool ladder = true;
    for (long n = 0; n <= 8; ++n) ladder = ladder && table.psi_exp(n) == goldens[n];
    check("radix ladder", ladder);

    const FiniteAdele minus_one = FiniteAdele::from_rational(table, Rat(-1), 12);
    bool digits = minus_one.digit(0) == 1;
    for (long k = 1; k < 12; ++k) digits = digits && minus_one.digit(k) == table.radix(k) - 1;
    check("expansion of -1", digits);

    check("expansion of 5/12",
          FiniteAdele::from_rational(table, Rat(5, 12), 0).to_digit_string() == "-3:1,2,0|0");
    check("haar measure of 3*Zhat", measure(table, ScaledUnit{Rat(3)}) == Rat(1, 3));
    check("canonical character of 5/12",
          canonical_character(table, FiniteAdele::from_rational(table, Rat(5, 12), 4)).value() ==
              Rat(5, 12));

    const auto decomposed =
        crt_decompose(table, FiniteAdele::from_rational(table, Rat(5, 12), 3), {2, 3});
    check("crt round trip of 5/12",
          crt_recompose(table, decomposed, -3, 3) ==
              FiniteAdele::from_rational(table, Rat(5, 12), 3));

    const TestFunction unit = indicator(table, 0, FiniteAdele::zero(4));
    check("fourier fixed point", std::abs(fourier(table, unit).coeffs()[0] - Complex(1)) < 1e-12);

    check("unit ball zeta at 1",
          std::abs(unit_ball_zeta(table, Complex(1.0), 1e-12).value - Complex(1)) < 1e-12);
    const auto gamma2 = gamma_Af(table, Complex(2.0), 1e-10);
    check("gamma at 2", std::abs(gamma2.value.real() + 1.3136469) < 1e-6);
    return bad == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic and harmonic analysis on the finite adele ring"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    long table_span = 8;
    auto* cmd_table = app.add_subcommand("table", "print the radix ladder");
    cmd_table->add_option("span", table_span, "index range [-span, span]");

    std::string arg_x, arg_y, arg_xi = "1";
    long precision = 8;
    auto* cmd_expand = app.add_subcommand("expand", "digit expansion of a rational");
    cmd_expand->add_option("value", arg_x, "rational or digit string")->required();
    cmd_expand->add_option("--precision", precision, "digits known up to this index");

    auto* cmd_add = app.add_subcommand("add", "sum of two adeles");
    cmd_add->add_option("x", arg_x)->required();
    cmd_add->add_option("y", arg_y)->required();
    cmd_add->add_option("--precision", precision, "embedding precision for rationals");

    auto* cmd_mul = app.add_subcommand("mul", "product of two adeles");
    cmd_mul->add_option("x", arg_x)->required();
    cmd_mul->add_option("y", arg_y)->required();
    cmd_mul->add_option("--precision", precision, "embedding precision for rationals");

    auto* cmd_neg = app.add_subcommand("neg", "additive inverse");
    cmd_neg->add_option("x", arg_x)->required();
    cmd_neg->add_option("--precision", precision, "embedding precision for rationals");

    auto* cmd_ord = app.add_subcommand("ord", "order (first nonzero digit index)");
    cmd_ord->add_option("x", arg_x)->required();
    cmd_ord->add_option("--precision", precision, "embedding precision for rationals");

    auto* cmd_norm = app.add_subcommand("norm", "ultrametric norm");
    cmd_norm->add_option("x", arg_x)->required();
    cmd_norm->add_option("--precision", precision, "embedding precision for rationals");

    auto* cmd_frac = app.add_subcommand("frac", "fractional part in [0,1)");
    cmd_frac->add_option("x", arg_x)->required();
    cmd_frac->add_option("--precision", precision, "embedding precision for rationals");

    auto* cmd_chi = app.add_subcommand("chi", "canonical character as a rotation number");
    cmd_chi->add_option("x", arg_x)->required();
    cmd_chi->add_option("--xi", arg_xi, "pair against chi_xi instead of chi");
    cmd_chi->add_option("--precision", precision, "embedding precision for rationals");

    auto* cmd_rank = app.add_subcommand("rank", "rank of the character chi_xi");
    cmd_rank->add_option("xi", arg_x)->required();
    cmd_rank->add_option("--precision", precision, "embedding precision for rationals");

    std::string region_kind, region_arg;
    auto* cmd_measure = app.add_subcommand("measure", "Haar measure of a region");
    cmd_measure->add_option("kind", region_kind, "ball | sphere | scaled")->required();
    cmd_measure->add_option("arg", region_arg, "ball/sphere index or scaling rational")
        ->required();

    auto* cmd_integral = app.add_subcommand("integral", "character integral over a region");
    cmd_integral->add_option("kind", region_kind, "ball | sphere")->required();
    cmd_integral->add_option("n", region_arg, "region index")->required();
    cmd_integral->add_option("--xi", arg_xi, "character parameter");
    cmd_integral->add_option("--precision", precision, "embedding precision for rationals");

    std::vector<long> primes = {2, 3, 5, 7, 11, 13};
    auto* cmd_crt = app.add_subcommand("crt", "p-adic components of an adele");
    cmd_crt->add_option("x", arg_x)->required();
    cmd_crt->add_option("--primes", primes, "primes to project onto");
    cmd_crt->add_option("--precision", precision, "embedding precision for rationals");

    std::string file_f, file_g;
    bool inverse = false;
    auto* cmd_fourier = app.add_subcommand("fourier", "transform a test function (JSON file)");
    cmd_fourier->add_option("f", file_f, "test function JSON")->required();
    cmd_fourier->add_flag("--inverse", inverse, "apply the inverse transform");

    auto* cmd_parseval = app.add_subcommand("parseval", "compare <f,g> with <Ff,Fg>");
    cmd_parseval->add_option("f", file_f, "test function JSON")->required();
    cmd_parseval->add_option("g", file_g, "test function JSON")->required();

    auto* cmd_special = app.add_subcommand("special", "Dirichlet-series evaluators");
    cmd_special->require_subcommand(1);
    std::string arg_s = "2";
    double eps = 1e-10, cauchy_m = 1.0;
    auto* sp_gamma = cmd_special->add_subcommand("gamma", "Gamma function of the adele ring");
    sp_gamma->add_option("--s", arg_s, "complex exponent RE[,IM]");
    sp_gamma->add_option("--eps", eps, "certified tail target");
    auto* sp_riesz = cmd_special->add_subcommand("riesz", "Riesz kernel transform");
    sp_riesz->add_option("--s", arg_s, "complex exponent RE[,IM]");
    sp_riesz->add_option("--xi", arg_xi, "character parameter");
    sp_riesz->add_option("--eps", eps, "certified tail target");
    auto* sp_log = cmd_special->add_subcommand("logint", "transform of log||x||");
    sp_log->add_option("--xi", arg_xi, "character parameter");
    sp_log->add_option("--eps", eps, "certified tail target");
    auto* sp_cauchy = cmd_special->add_subcommand("cauchy", "Cauchy kernel transform");
    sp_cauchy->add_option("--m", cauchy_m, "kernel scale M > 0");
    sp_cauchy->add_option("--xi", arg_xi, "character parameter");
    sp_cauchy->add_option("--eps", eps, "certified tail target");
    auto* sp_zeta = cmd_special->add_subcommand("zeta", "zeta of the unit ball");
    sp_zeta->add_option("--s", arg_s, "complex exponent RE[,IM]");
    sp_zeta->add_option("--eps", eps, "certified tail target");

    auto* cmd_selftest = app.add_subcommand("selftest", "run the golden-value checks");
    (void)cmd_selftest;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        RadixTable table(table_ceiling());

        if (cmd_table->parsed()) {
            json rows = json::array();
            for (long n = -table_span; n <= table_span; ++n) {
                if (as_json)
                    rows.push_back({{"n", n},
                                    {"radix", table.radix(n)},
                                    {"rho", table.rho(n)},
                                    {"psi_exp", to_string(table.psi_exp(n))}});
                else
                    std::cout << n << "\t" << table.radix(n) << "\t" << table.rho(n) << "\t"
                              << to_string(table.psi_exp(n)) << "\n";
            }
            if (as_json) std::cout << rows.dump(2) << "\n";
        } else if (cmd_expand->parsed() || cmd_neg->parsed()) {
            FiniteAdele x = parse_adele(table, arg_x, precision);
            if (cmd_neg->parsed()) x = negate(table, x);
            if (as_json)
                std::cout << json{{"digits", x.to_digit_string()}}.dump() << "\n";
            else
                std::cout << x.to_digit_string() << "\n";
        } else if (cmd_add->parsed() || cmd_mul->parsed()) {
            const FiniteAdele x = parse_adele(table, arg_x, precision);
            const FiniteAdele y = parse_adele(table, arg_y, precision);
            const FiniteAdele r = cmd_add->parsed() ? add(table, x, y) : mul(table, x, y);
            if (as_json)
                std::cout << json{{"digits", r.to_digit_string()}}.dump() << "\n";
            else
                std::cout << r.to_digit_string() << "\n";
        } else if (cmd_ord->parsed()) {
            const OrdResult o = ord(parse_adele(table, arg_x, precision));
            if (as_json)
                std::cout << json{{"known", o.known}, {"value", o.value}}.dump() << "\n";
            else
                std::cout << (o.known ? "" : ">=") << o.value << "\n";
        } else if (cmd_norm->parsed()) {
            std::cout << to_string(norm(table, parse_adele(table, arg_x, precision))) << "\n";
        } else if (cmd_frac->parsed()) {
            std::cout << to_string(fractional_part(table, parse_adele(table, arg_x, precision)))
                      << "\n";
        } else if (cmd_chi->parsed()) {
            const FiniteAdele x = parse_adele(table, arg_x, precision);
            const RotationNumber r =
                cmd_chi->count("--xi")
                    ? character_at(table, parse_adele(table, arg_xi, precision), x)
                    : canonical_character(table, x);
            if (as_json)
                std::cout << json{{"rotation", to_string(r.value())}}.dump() << "\n";
            else
                std::cout << to_string(r.value()) << "\n";
        } else if (cmd_rank->parsed()) {
            std::cout << character_rank(table, parse_adele(table, arg_x, precision)) << "\n";
        } else if (cmd_measure->parsed()) {
            Rat m;
            if (region_kind == "ball")
                m = measure(table, Ball{parse_long(region_arg)});
            else if (region_kind == "sphere")
                m = measure(table, Sphere{parse_long(region_arg)});
            else if (region_kind == "scaled")
                m = measure(table, ScaledUnit{parse_rational(region_arg)});
            else
                throw parse_error("unknown region kind: " + region_kind);
            if (as_json)
                std::cout << json{{"measure", to_string(m)}}.dump() << "\n";
            else
                std::cout << to_string(m) << "\n";
        } else if (cmd_integral->parsed()) {
            const FiniteAdele xi = parse_adele(table, arg_xi, precision);
            const long n = parse_long(region_arg);
            Rat v;
            if (region_kind == "ball")
                v = ball_character_integral(table, n, xi);
            else if (region_kind == "sphere")
                v = sphere_character_integral(table, n, xi);
            else
                throw parse_error("unknown region kind: " + region_kind);
            if (as_json)
                std::cout << json{{"integral", to_string(v)}}.dump() << "\n";
            else
                std::cout << to_string(v) << "\n";
        } else if (cmd_crt->parsed()) {
            const FiniteAdele x = parse_adele(table, arg_x, precision);
            const auto parts = crt_decompose(table, x, primes);
            if (as_json) {
                json out;
                for (const auto& [p, comp] : parts)
                    out[std::to_string(p)] = {{"valuation", comp.valuation()},
                                              {"digits", comp.digits()},
                                              {"precision", comp.precision()}};
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& [p, comp] : parts)
                    std::cout << p << ": " << padic_string(comp) << "\n";
            }
        } else if (cmd_fourier->parsed()) {
            const TestFunction f = load_function(table, file_f);
            const TestFunction out = inverse ? inverse_fourier(table, f) : fourier(table, f);
            std::cout << dump_function(table, out).dump(2) << "\n";
        } else if (cmd_parseval->parsed()) {
            const TestFunction f = load_function(table, file_f);
            const TestFunction g = load_function(table, file_g);
            const Complex lhs = inner_product(table, f, g);
            const Complex rhs = inner_product(table, fourier(table, f), fourier(table, g));
            const json out = {{"inner_re", lhs.real()},
                              {"inner_im", lhs.imag()},
                              {"transformed_re", rhs.real()},
                              {"transformed_im", rhs.imag()},
                              {"difference", std::abs(lhs - rhs)}};
            if (as_json)
                std::cout << out.dump(2) << "\n";
            else
                std::cout << "<f,g>   = " << lhs << "\n<Ff,Fg> = " << rhs
                          << "\n|diff|  = " << std::abs(lhs - rhs) << "\n";
        } else if (cmd_special->parsed()) {
            SeriesResult r;
            if (sp_gamma->parsed())
                r = gamma_Af(table, parse_complex(arg_s), eps);
            else if (sp_riesz->parsed())
                r = riesz_kernel(table, parse_complex(arg_s),
                                 parse_adele(table, arg_xi, precision), eps);
            else if (sp_log->parsed())
                r = log_norm_transform(table, parse_adele(table, arg_xi, precision), eps);
            else if (sp_cauchy->parsed())
                r = cauchy_kernel_transform(table, cauchy_m,
                                            parse_adele(table, arg_xi, precision), eps);
            else
                r = unit_ball_zeta(table, parse_complex(arg_s), eps);
            std::cout << series_json(r).dump(2) << "\n";
        } else if (cmd_selftest->parsed()) {
            return selftest(table);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
