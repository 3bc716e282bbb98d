#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qfaulhaber/faulhaber.hpp"
#include "qfaulhaber/format.hpp"
#include "qfaulhaber/json_io.hpp"
#include "qfaulhaber/lgv.hpp"
#include "qfaulhaber/salie.hpp"
#include "qfaulhaber/suites.hpp"

namespace {

using namespace qfaulhaber;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Resolves --out: the stream lives for the duration of one command.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error("cannot open output file: " + path);
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

int cmd_psum(int m, int n, OutputFormat fmt, Output& out) {
    TPoly p = power_sum(m, n);
    switch (fmt) {
        case OutputFormat::Text:
            out.os() << to_q_string(p) << "\n";
            break;
        case OutputFormat::Json:
            out.os() << poly_to_json(p).dump(2) << "\n";
            break;
        case OutputFormat::Csv:
            out.os() << "m,n,polynomial\n" << m << "," << n << "," << csv_quote(to_q_string(p)) << "\n";
            break;
        case OutputFormat::Latex:
            out.os() << "$" << to_q_latex(p) << "$\n";
            break;
    }
    return kExitPass;
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Determinant: return "determinant";
        case Provenance::Inverse: return "inverse";
        case Provenance::LgvBruteforce: return "lgv_bruteforce";
    }
    return "?";
}

int cmd_faulhaber(int m_max, OutputFormat fmt, Output& out) {
    FaulhaberTable table = FaulhaberTable::build(m_max);
    switch (fmt) {
        case OutputFormat::Text:
            for (int m = 0; m <= m_max; ++m)
                for (int k = 0; k <= m; ++k)
                    out.os() << "P[" << m << "," << k << "] = "
                             << to_q_string(table.cell(m, k).value.poly()) << "\n";
            break;
        case OutputFormat::Json: {
            json cells = json::array();
            for (int m = 0; m <= m_max; ++m)
                for (int k = 0; k <= m; ++k) {
                    const FaulhaberCell& c = table.cell(m, k);
                    cells.push_back(json{{"m", m},
                                         {"k", k},
                                         {"q_degree", c.q_degree},
                                         {"provenance", provenance_name(c.provenances.front())},
                                         {"polynomial", poly_to_json(c.value.poly())}});
                }
            out.os() << json{{"m_max", m_max}, {"cells", std::move(cells)}}.dump(2) << "\n";
            break;
        }
        case OutputFormat::Csv:
            out.os() << "m,k,polynomial\n";
            for (int m = 0; m <= m_max; ++m)
                for (int k = 0; k <= m; ++k)
                    out.os() << m << "," << k << ","
                             << csv_quote(to_q_string(table.cell(m, k).value.poly())) << "\n";
            break;
        case OutputFormat::Latex:
            out.os() << "\\begin{tabular}{rrl}\n$m$ & $k$ & $P_{m,k}(q)$ \\\\\n\\hline\n";
            for (int m = 0; m <= m_max; ++m)
                for (int k = 0; k <= m; ++k)
                    out.os() << m << " & " << k << " & $"
                             << to_q_latex(table.cell(m, k).value.poly()) << "$ \\\\\n";
            out.os() << "\\end{tabular}\n";
            break;
    }
    return kExitPass;
}

int cmd_verify(const std::string& suite, const SuiteRanges& ranges, OutputFormat fmt, Output& out) {
    VerifyReport report = run_suite(suite, ranges);
    const bool pass = report.overall();
    switch (fmt) {
        case OutputFormat::Text:
            out.os() << "suite: " << report.suite << "\n";
            for (const VerifyCase& c : report.cases) {
                out.os() << (c.pass ? "[pass] " : "[FAIL] ") << c.id << " (" << std::fixed
                         << std::setprecision(3) << c.seconds << "s)";
                if (!c.detail.empty()) out.os() << " -- " << c.detail;
                out.os() << "\n";
            }
            out.os() << "overall: " << (pass ? "PASS" : "FAIL") << " (" << report.cases.size()
                      << " cases, " << std::fixed << std::setprecision(3) << report.total_seconds()
                      << "s)\n";
            break;
        case OutputFormat::Json: {
            json cases = json::array();
            for (const VerifyCase& c : report.cases)
                cases.push_back(json{{"id", c.id}, {"pass", c.pass}, {"seconds", c.seconds},
                                     {"detail", c.detail}});
            out.os() << json{{"suite", report.suite},
                             {"overall", pass},
                             {"total_seconds", report.total_seconds()},
                             {"cases", std::move(cases)}}
                            .dump(2)
                     << "\n";
            break;
        }
        case OutputFormat::Csv:
            out.os() << "id,pass,seconds,detail\n";
            for (const VerifyCase& c : report.cases)
                out.os() << csv_quote(c.id) << "," << (c.pass ? "true" : "false") << "," << c.seconds
                         << "," << csv_quote(c.detail) << "\n";
            break;
        case OutputFormat::Latex:
            out.os() << "\\begin{tabular}{lr}\ncase & verdict \\\\\n\\hline\n";
            for (const VerifyCase& c : report.cases)
                out.os() << c.id << " & " << (c.pass ? "pass" : "fail") << " \\\\\n";
            out.os() << "\\end{tabular}\n";
            break;
    }
    return pass ? kExitPass : kExitFail;
}

int cmd_salie(int m, int probes, int degree_bound, OutputFormat fmt, Output& out) {
    SalieFit fit;
    try {
        fit = salie_fit(m, probes, degree_bound);
    } catch (const NoConsistentFit& e) {
        std::cerr << "no consistent fit: " << e.what() << "\n";
        return kExitFail;
    } catch (const UnderDetermined& e) {
        std::cerr << "underdetermined: " << e.what() << "\n";
        return kExitFail;
    }
    auto has_negative = [](const TPoly& g) {
        for (const Integer& c : g.coeffs())
            if (c < 0) return true;
        return false;
    };
    switch (fmt) {
        case OutputFormat::Text:
            for (const auto& [k, g] : fit.g) {
                out.os() << "g[" << k << "," << m << "] = " << to_q_string(g);
                if (has_negative(g)) out.os() << "   (negative coefficients present)";
                out.os() << "\n";
            }
            break;
        case OutputFormat::Json: {
            json fits = json::array();
            for (const auto& [k, g] : fit.g)
                fits.push_back(json{{"k", k},
                                    {"has_negative", has_negative(g)},
                                    {"polynomial", poly_to_json(g)}});
            out.os() << json{{"m", fit.m},
                             {"degree_bound_used", fit.degree_bound_used},
                             {"probes_used", fit.probes_used},
                             {"residual_ok", fit.residual_ok},
                             {"fits", std::move(fits)}}
                            .dump(2)
                     << "\n";
            break;
        }
        case OutputFormat::Csv:
            out.os() << "m,k,polynomial,has_negative\n";
            for (const auto& [k, g] : fit.g)
                out.os() << m << "," << k << "," << csv_quote(to_q_string(g)) << ","
                         << (has_negative(g) ? "true" : "false") << "\n";
            break;
        case OutputFormat::Latex:
            out.os() << "\\begin{align*}\n";
            for (const auto& [k, g] : fit.g)
                out.os() << "g_{" << k << "," << m << "}(q) &= " << to_q_latex(g) << " \\\\\n";
            out.os() << "\\end{align*}\n";
            break;
    }
    return kExitPass;
}

int cmd_lgv(int m, int k, const std::string& parity_name, std::uint64_t budget, OutputFormat fmt,
            Output& out) {
    const WeightParity parity =
        parity_name == "odd" ? WeightParity::Odd : WeightParity::Even;
    QPoly det = lgv_determinant(m, k, parity);
    QPoly brute;
    try {
        brute = bruteforce_family_sum(m, k, parity, budget);
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitFail;
    }
    const bool match = det == brute;
    switch (fmt) {
        case OutputFormat::Text:
            out.os() << "determinant = " << to_q_string(det.poly()) << "\n";
            out.os() << "brute force = " << to_q_string(brute.poly()) << "\n";
            out.os() << "match: " << (match ? "yes" : "NO") << "\n";
            break;
        case OutputFormat::Json:
            out.os() << json{{"m", m},
                             {"k", k},
                             {"parity", parity_name},
                             {"determinant", poly_to_json(det.poly())},
                             {"bruteforce", poly_to_json(brute.poly())},
                             {"match", match}}
                            .dump(2)
                     << "\n";
            break;
        case OutputFormat::Csv:
            out.os() << "m,k,parity,determinant,bruteforce,match\n"
                     << m << "," << k << "," << parity_name << ","
                     << csv_quote(to_q_string(det.poly())) << ","
                     << csv_quote(to_q_string(brute.poly())) << "," << (match ? "true" : "false")
                     << "\n";
            break;
        case OutputFormat::Latex:
            out.os() << "$P_{" << m << "," << k << "}(q) = " << to_q_latex(det.poly()) << "$\n";
            break;
    }
    return match ? kExitPass : kExitFail;
}

int cmd_report(int m_max, int salie_m_max, OutputFormat fmt, Output& out) {
    auto lc = logconcavity_report(m_max);
    auto signs = salie_sign_report(salie_m_max);
    switch (fmt) {
        case OutputFormat::Text:
            out.os() << "log-concavity of P[m,k] for m <= " << m_max << " (report only):\n";
            for (const auto& e : lc)
                out.os() << "  P[" << e.m << "," << e.k << "]: "
                         << (e.log_concave ? "log-concave" : "not log-concave") << "\n";
            out.os() << "sign report for fitted g[k,m], m <= " << salie_m_max << ":\n";
            for (const auto& e : signs)
                out.os() << "  g[" << e.k << "," << e.m << "]: "
                         << (e.has_negative ? "has negative coefficients" : "all nonnegative")
                         << "\n";
            break;
        case OutputFormat::Json: {
            json lcj = json::array();
            for (const auto& e : lc)
                lcj.push_back(json{{"m", e.m}, {"k", e.k}, {"log_concave", e.log_concave}});
            json sj = json::array();
            for (const auto& e : signs)
                sj.push_back(json{{"m", e.m},
                                  {"k", e.k},
                                  {"has_negative", e.has_negative},
                                  {"polynomial", poly_to_json(e.g)}});
            out.os() << json{{"log_concavity", std::move(lcj)}, {"salie_signs", std::move(sj)}}.dump(2)
                     << "\n";
            break;
        }
        case OutputFormat::Csv:
            out.os() << "report,m,k,flag\n";
            for (const auto& e : lc)
                out.os() << "log_concave," << e.m << "," << e.k << ","
                         << (e.log_concave ? "true" : "false") << "\n";
            for (const auto& e : signs)
                out.os() << "salie_has_negative," << e.m << "," << e.k << ","
                         << (e.has_negative ? "true" : "false") << "\n";
            break;
        case OutputFormat::Latex:
            out.os() << "\\begin{tabular}{lrrl}\nreport & m & k & flag \\\\\n\\hline\n";
            for (const auto& e : lc)
                out.os() << "log-concave & " << e.m << " & " << e.k << " & "
                         << (e.log_concave ? "yes" : "no") << " \\\\\n";
            for (const auto& e : signs)
                out.os() << "negative coefficient & " << e.m << " & " << e.k << " & "
                         << (e.has_negative ? "yes" : "no") << " \\\\\n";
            out.os() << "\\end{tabular}\n";
            break;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations around q-analogues of Faulhaber's power-sum formulas"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "json", "csv", "latex"};

    int m = 0, n = 0, k = 0, m_max = 0, n_max = -1, k_max = -1, dim_max = -1;
    int probes = -1, degree_bound = -1, salie_m_max = 4;
    std::uint64_t budget = 1'000'000;
    std::string format_name = "text", out_path, suite, parity_name = "even";

    CLI::App* psum = app.add_subcommand("psum", "q-power sum S_{m,n}");
    psum->add_option("--m", m, "exponent m (odd m gives a polynomial in q)")
        ->required()
        ->check(CLI::PositiveNumber);
    psum->add_option("--n", n, "upper summation limit")->required()->check(CLI::NonNegativeNumber);

    CLI::App* faul = app.add_subcommand("faulhaber", "table of the coefficients P_{m,k}");
    faul->add_option("--m-max", m_max, "largest m")->required()->check(CLI::NonNegativeNumber);

    CLI::App* verify = app.add_subcommand("verify", "run an exact verification suite");
    verify->add_option("suite", suite, "one of eq2, lemma1, inverse, lgv, table1, props, all")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    int verify_m_max = -1;
    verify->add_option("--m-max", verify_m_max, "override the suite's m sweep bound");
    verify->add_option("--n-max", n_max, "override the suite's n sweep bound");
    verify->add_option("--k-max", k_max, "override the lgv suite's k bound");
    verify->add_option("--dim-max", dim_max, "override the inverse suite's dimension bound");
    verify->add_option("--budget", budget, "tuple budget for brute-force enumeration");

    CLI::App* salie = app.add_subcommand("salie", "fit the alternating-sum coefficients g_{k,m}");
    salie->add_option("--m", m, "column of the coefficient table")->required()->check(CLI::PositiveNumber);
    salie->add_option("--probes", probes, "number of probe values of n (default m + 3)");
    salie->add_option("--degree-bound", degree_bound,
                      "fixed t-degree bound per g (default: auto with escalation)");

    CLI::App* lgv = app.add_subcommand("lgv", "non-intersecting path determinant vs brute force");
    lgv->add_option("--m", m, "index m")->required()->check(CLI::PositiveNumber);
    lgv->add_option("--k", k, "number of paths")->required()->check(CLI::PositiveNumber);
    lgv->add_option("--budget", budget, "tuple budget for brute-force enumeration");
    lgv->add_option("--parity", parity_name, "x-parity of weighted North steps")
        ->check(CLI::IsMember({"even", "odd"}));

    int report_m_max = 10;
    CLI::App* report = app.add_subcommand("report", "log-concavity and sign reports");
    report->add_option("--m-max", report_m_max, "largest m for the log-concavity report")
        ->check(CLI::PositiveNumber);
    report->add_option("--salie-m-max", salie_m_max, "largest m for the sign report")
        ->check(CLI::PositiveNumber);

    for (CLI::App* sub : {psum, faul, verify, salie, lgv, report}) {
        sub->add_option("--format", format_name, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", out_path, "write output to a file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        OutputFormat fmt = parse_format(format_name);
        Output out(out_path);
        if (app.got_subcommand(psum)) return cmd_psum(m, n, fmt, out);
        if (app.got_subcommand(faul)) return cmd_faulhaber(m_max, fmt, out);
        if (app.got_subcommand(verify)) {
            SuiteRanges ranges;
            ranges.m_max = verify_m_max;
            ranges.n_max = n_max;
            ranges.k_max = k_max;
            ranges.dim_max = dim_max;
            ranges.budget = budget;
            return cmd_verify(suite, ranges, fmt, out);
        }
        if (app.got_subcommand(salie)) return cmd_salie(m, probes, degree_bound, fmt, out);
        if (app.got_subcommand(lgv)) {
            if (k > m) {
                std::cerr << "lgv: --k must not exceed --m\n";
                return kExitUsage;
            }
            return cmd_lgv(m, k, parity_name, budget, fmt, out);
        }
        if (app.got_subcommand(report)) return cmd_report(report_m_max, salie_m_max, fmt, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
