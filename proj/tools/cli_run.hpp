// Subcommand wiring for the hpsum executable; run() is callable in-process for tests.
#pragma once

#include "cli_app.hpp"

namespace hpsum::cli {

inline std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos)
            throw std::invalid_argument("bad number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

inline int print_suite(std::ostream& out, const std::vector<suite_report>& suites, output_format fmt) {
    bool ok = true;
    if (fmt == output_format::json) {
        auto arr = nlohmann::json::array();
        for (const auto& s : suites)
            for (const auto& f : s.families) {
                arr.push_back({{"suite", s.suite},
                               {"family", f.name},
                               {"max_residual", f.max_residual},
                               {"bound", f.bound},
                               {"cases", f.cases},
                               {"worst_case", f.worst_case},
                               {"passed", f.passed()}});
                ok = ok && f.passed();
            }
        out << arr.dump(2) << '\n';
    } else {
        if (fmt == output_format::csv) out << "suite,family,max_residual,bound,cases,passed\n";
        for (const auto& s : suites)
            for (const auto& f : s.families) {
                ok = ok && f.passed();
                if (fmt == output_format::csv) {
                    out << s.suite << ',' << f.name << ',' << format_double(f.max_residual) << ','
                        << format_double(f.bound) << ',' << f.cases << ',' << (f.passed() ? "true" : "false") << '\n';
                } else {
                    out << (f.passed() ? "PASS " : "FAIL ") << std::left << std::setw(10) << s.suite
                        << std::setw(44) << f.name << " max " << std::setw(12) << std::setprecision(3)
                        << f.max_residual << " bound " << f.bound << "  (" << f.cases << " cases";
                    if (!f.passed()) out << ", worst " << f.worst_case;
                    out << ")\n";
                }
            }
    }
    return ok ? exit_code::ok : exit_code::verification_failed;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partial sums of harmonic progressions sum 1/(a i j + b)^k"};
    app.require_subcommand(1);

    cli_config cfg;
    std::string output = "json";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", cfg.tol, "absolute tolerance on the returned sum")->check(CLI::Range(1e-14, 1e-2));
        sub->add_option("--output", output, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
        sub->add_flag("--skip-singular", cfg.skip_singular, "drop infinite terms from both sides");
    };

    long a = 1;
    double b_re = 0.0, b_im = 0.0;
    unsigned k = 1;
    std::uint64_t n = 0;
    auto* hp = app.add_subcommand("hp", "evaluate HP_k(n)");
    hp->add_option("--a", a, "nonzero integer coefficient of i j");
    hp->add_option("--b", b_re, "real part of b");
    hp->add_option("--bi", b_im, "imaginary part of b");
    hp->add_option("--k", k, "power")->required();
    hp->add_option("--n", n, "number of terms")->required();
    hp->add_option("--method", cfg.method, "auto, direct, exp, real_shift, cos, sin, integer")
        ->check(CLI::IsMember({"auto", "direct", "exp", "real_shift", "cos", "sin", "integer"}));
    add_common(hp);

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run verification sweeps against direct summation");
    verify->add_option("--suite", suite, "oracle, series, lagrange, singular or all")
        ->check(CLI::IsMember({"oracle", "series", "lagrange", "singular", "all"}));
    add_common(verify);

    std::string coeffs, coeffs_im;
    auto* decompose = app.add_subcommand("decompose", "sum 1/p(j) by partial fractions");
    decompose->add_option("--coeffs", coeffs, "real parts of the coefficients, ascending degree, comma separated")
        ->required();
    decompose->add_option("--coeffs-im", coeffs_im, "imaginary parts of the coefficients");
    decompose->add_option("--n", n, "number of terms")->required();
    add_common(decompose);

    std::string route = "closed";
    auto* series = app.add_subcommand("series", "print integrand polynomial coefficients");
    series->add_option("--k", k, "order")->required();
    series->add_option("--b", b_re, "real part of b");
    series->add_option("--bi", b_im, "imaginary part of b");
    series->add_option("--route", route, "recurrence, generating, closed, q, cos_f, cos_g, sin_f, sin_g")
        ->check(CLI::IsMember({"recurrence", "generating", "closed", "q", "cos_f", "cos_g", "sin_f", "sin_g"}));
    add_common(series);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    cfg.output = output_names.at(output);
    const complex_t b{b_re, b_im};

    try {
        if (*hp) {
            const auto report = evaluate_hp(hp_params{a, b, k, n}, cfg);
            print_report(out, report, cfg.output);
            return report.converged() ? exit_code::ok : exit_code::quadrature_failed;
        }
        if (*verify) {
            std::vector<suite_report> suites;
            if (suite == "oracle" || suite == "all") suites.push_back(verify_oracle(cfg.tol));
            if (suite == "series" || suite == "all") suites.push_back(verify_series());
            if (suite == "lagrange" || suite == "all") suites.push_back(verify_lagrange());
            if (suite == "singular" || suite == "all") suites.push_back(verify_singular(cfg.tol));
            return print_suite(out, suites, cfg.output);
        }
        if (*decompose) {
            const auto re = parse_list(coeffs);
            const auto im = coeffs_im.empty() ? std::vector<double>(re.size(), 0.0) : parse_list(coeffs_im);
            if (im.size() != re.size()) throw std::invalid_argument("--coeffs-im must match --coeffs in length");
            std::vector<complex_t> c;
            for (std::size_t i = 0; i < re.size(); ++i) c.emplace_back(re[i], im[i]);
            const polynomial p(c);
            if (p.degree() < 1) throw validity_error("decompose: polynomial degree must be >= 1");
            const auto result = sum_reciprocal_poly(p, n, cfg.tol, cfg.skip_singular);
            std::vector<complex_t> roots, weights;
            for (const auto& t : result.terms) {
                roots.push_back(t.root);
                weights.push_back(t.weight);
            }
            nlohmann::json j;
            j["roots"] = complex_list_to_json(roots);
            j["weights"] = complex_list_to_json(weights);
            j["sum"] = complex_to_json(result.report.value);
            j["diagnostics"] = to_json(result.report);
            if (cfg.output == output_format::json) {
                out << j.dump() << '\n';
            } else {
                print_report(out, result.report, cfg.output);
            }
            return result.report.converged() ? exit_code::ok : exit_code::quadrature_failed;
        }
        if (*series) {
            upolynomial poly;
            if (route == "recurrence") poly = pk_from_recurrence(k, b);
            else if (route == "generating") poly = pk_from_generating(k, b);
            else if (route == "closed") poly = pk_closed_form(k, b);
            else if (route == "q") poly = qk_from_recurrence(k, b);
            else if (route == "cos_f") poly = trig_taylor_coeff(trig_function::cos_f, k, b);
            else if (route == "cos_g") poly = trig_taylor_coeff(trig_function::cos_g, k, b);
            else if (route == "sin_f") poly = trig_taylor_coeff(trig_function::sin_f, k, b);
            else poly = trig_taylor_coeff(trig_function::sin_g, k, b);
            nlohmann::json j{{"route", route}, {"k", k}, {"b", complex_to_json(b)}, {"coefficients", to_json(poly)}};
            out << j.dump() << '\n';
            return exit_code::ok;
        }
    } catch (const validity_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_parameters;
    } catch (const root_finding_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_parameters;
    } catch (const series_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_parameters;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_parameters;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_parameters;
    }
    return exit_code::ok;
}

}  // namespace hpsum::cli
