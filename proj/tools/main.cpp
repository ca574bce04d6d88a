// Command-line front end for the twistknot C API: per-knot certificates,
// range sweeps, and table/json/csv rendering of the results.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistknot.h"

namespace {

using json = nlohmann::json;

constexpr int kExitVerified = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitUsage = 2;

struct Flags {
    std::string format = "table";
    bool fox = false;
    bool numeric = true;
    double tol = 1e-12;
};

struct Row {
    int q = 0;
    std::string report_json;
    bool consistent = false;
    int fox_agrees = -1;   // -1 not run
    int numeric_ok = -1;   // -1 not run
    bool passed = false;   // consistent and every enabled cross-check green
};

std::string coeff_str(const json& c) {
    if (c.is_string()) return c.get<std::string>();
    return std::to_string(c.get<std::int64_t>());
}

// "1 - 2u + u^2 - u^3" from an ascending coefficient array
std::string poly_str(const json& coeffs, const std::string& var) {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        std::string c = coeff_str(coeffs[i]);
        if (c == "0") continue;
        const bool negative = !c.empty() && c[0] == '-';
        const std::string mag = negative ? c.substr(1) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (i == 0) {
            out << mag;
        } else {
            if (mag != "1") out << mag;
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    if (first) return "0";
    return out.str();
}

std::string joined_coeffs(const json& coeffs) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += " ";
        out += coeff_str(coeffs[i]);
    }
    return out;
}

std::string yesno(bool v) { return v ? "yes" : "no"; }

std::string tristate(int v, const char* yes, const char* no) {
    if (v < 0) return "-";
    return v ? yes : no;
}

int certify_row(int q, const Flags& flags, Row& row) {
    tk_options opts;
    tk_options_init(&opts);
    opts.run_fox = flags.fox ? 1 : 0;
    opts.run_numeric = flags.numeric ? 1 : 0;
    opts.tol = flags.tol;

    tk_report* report = nullptr;
    const tk_status st = tk_certify(q, &opts, &report);
    if (st != TK_OK) return st;

    char* text = nullptr;
    const tk_status jst = tk_report_to_json(report, &text);
    if (jst != TK_OK) {
        tk_report_free(report);
        return jst;
    }
    row.q = q;
    row.report_json = text;
    row.consistent = tk_report_consistent(report) == 1;
    row.fox_agrees = tk_report_fox_agrees(report);
    row.numeric_ok = tk_report_numeric_ok(report);
    row.passed = row.consistent && row.fox_agrees != 0 && row.numeric_ok != 0;
    tk_string_free(text);
    tk_report_free(report);
    return TK_OK;
}

void print_analyze_table(const Row& row) {
    const json j = json::parse(row.report_json);
    std::cout << "q = " << row.q << "   " << j.at("knot").get<std::string>() << "\n";
    std::cout << "  riley:               " << poly_str(j["riley"]["coeffs"], "u") << "   [deg "
              << j["riley"]["degree"] << ", leading " << j["riley"]["leading"] << "]\n";
    std::cout << "  tau:                 " << poly_str(j["tau_q"]["coeffs"], "u") << "\n";
    std::cout << "  gamma:               " << poly_str(j["gamma"]["coeffs"], "u") << "   [deg "
              << j["gamma"]["degree"] << "]\n";
    std::cout << "  delta:               " << poly_str(j["delta"]["coeffs"], "u") << "   [deg "
              << (j["delta"]["degree"].is_null() ? std::string("-inf")
                                                 : j["delta"]["degree"].dump())
              << "]\n";
    std::cout << "  alexander:           " << poly_str(j["alexander"], "t") << "\n";
    std::cout << "  gcd(phi, gamma):     " << poly_str(j["certificates"]["gcd_gamma"], "u")
              << "\n";
    std::cout << "  gcd(phi, gamma-1):   " << poly_str(j["certificates"]["gcd_gamma_minus_1"], "u")
              << "\n";
    std::cout << "  gcd(phi, gamma+1):   " << poly_str(j["certificates"]["gcd_gamma_plus_1"], "u")
              << "\n";
    const json& v = j["verdicts"];
    std::cout << "  genus detected:      " << yesno(v["genus_detected"].get<bool>()) << "\n";
    std::cout << "  monic at some rep:   " << yesno(v["monic_at_some_rep"].get<bool>()) << "\n";
    std::cout << "  fibered (expected):  " << yesno(v["fibered_expected"].get<bool>()) << "\n";
    std::cout << "  consistent:          " << yesno(v["consistent"].get<bool>()) << "\n";
    std::cout << "  fox oracle:          " << tristate(row.fox_agrees, "agrees", "DISAGREES")
              << "\n";
    if (row.numeric_ok < 0) {
        std::cout << "  numeric:             -\n";
    } else {
        const json& roots = j["numeric"]["roots"];
        double max_res = 0.0, min_gamma = -1.0;
        for (const auto& r : roots) {
            max_res = std::max(max_res, r["residual"].get<double>());
            const double g = r["gamma_abs"].get<double>();
            min_gamma = (min_gamma < 0.0) ? g : std::min(min_gamma, g);
        }
        std::cout << "  numeric:             " << roots.size() << " roots, max residual "
                  << max_res << ", min |gamma| " << min_gamma << ", "
                  << (row.numeric_ok == 1 ? "ok" : "FAILED") << "\n";
    }
}

const char* kCsvHeader =
    "q,knot,riley_degree,riley_leading,gamma_degree,delta_degree,genus_detected,"
    "monic_at_some_rep,fibered_expected,consistent,fox_ran,fox_agrees,numeric_ran,"
    "numeric_ok,riley_coeffs,gamma_coeffs,delta_coeffs";

std::string csv_row(const Row& row) {
    const json j = json::parse(row.report_json);
    const json& v = j["verdicts"];
    std::ostringstream out;
    out << row.q << "," << j["knot"].get<std::string>() << "," << j["riley"]["degree"] << ","
        << j["riley"]["leading"] << "," << j["gamma"]["degree"] << ",";
    if (!j["delta"]["degree"].is_null()) out << j["delta"]["degree"];
    out << "," << v["genus_detected"].get<bool>() << "," << v["monic_at_some_rep"].get<bool>()
        << "," << v["fibered_expected"].get<bool>() << "," << v["consistent"].get<bool>() << ","
        << (row.fox_agrees >= 0) << ",";
    if (row.fox_agrees >= 0) out << row.fox_agrees;
    out << "," << (row.numeric_ok >= 0) << ",";
    if (row.numeric_ok >= 0) out << row.numeric_ok;
    out << ",\"" << joined_coeffs(j["riley"]["coeffs"]) << "\",\""
        << joined_coeffs(j["gamma"]["coeffs"]) << "\",\"" << joined_coeffs(j["delta"]["coeffs"])
        << "\"";
    return out.str();
}

void print_sweep_table_header() {
    std::cout << "     q  knot         deg(phi)  deg(gamma)  deg(delta)  genus  monic@rep  "
                 "fibered  consistent  fox      numeric\n";
}

void print_sweep_table_row(const Row& row) {
    const json j = json::parse(row.report_json);
    const json& v = j["verdicts"];
    std::ostringstream line;
    line << std::setw(6) << row.q << "  " << std::left << std::setw(13)
         << j["knot"].get<std::string>() << std::right << std::setw(8)
         << j["riley"]["degree"].dump() << std::setw(12) << j["gamma"]["degree"].dump()
         << std::setw(12)
         << (j["delta"]["degree"].is_null() ? std::string("-inf") : j["delta"]["degree"].dump())
         << std::setw(7) << yesno(v["genus_detected"].get<bool>()) << std::setw(11)
         << yesno(v["monic_at_some_rep"].get<bool>()) << std::setw(9)
         << yesno(v["fibered_expected"].get<bool>()) << std::setw(12)
         << yesno(v["consistent"].get<bool>()) << std::setw(9)
         << tristate(row.fox_agrees, "agrees", "differs") << std::setw(9)
         << tristate(row.numeric_ok, "ok", "failed");
    std::cout << line.str() << "\n";
}

int run_records(const std::vector<int>& qs, const Flags& flags) {
    std::vector<Row> rows(qs.size());
    std::vector<int> errors(qs.size(), TK_OK);

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const size_t workers = std::min<size_t>(hw, qs.size());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= qs.size()) return;
                errors[i] = certify_row(qs[i], flags, rows[i]);
            }
        });
    }
    for (auto& t : pool) t.join();

    for (size_t i = 0; i < qs.size(); ++i) {
        if (errors[i] != TK_OK) {
            std::cerr << "error: q=" << qs[i] << ": "
                      << tk_status_message(static_cast<tk_status>(errors[i])) << "\n";
            return kExitInconsistent;
        }
    }

    size_t consistent = 0, passed = 0;
    for (const Row& row : rows) {
        consistent += row.consistent ? 1 : 0;
        passed += row.passed ? 1 : 0;
    }

    const bool single = (qs.size() == 1);
    if (flags.format == "json") {
        for (const Row& row : rows) std::cout << row.report_json << "\n";
        std::cerr << "consistent: " << consistent << "/" << qs.size() << "\n";
    } else if (flags.format == "csv") {
        std::cout << kCsvHeader << "\n";
        for (const Row& row : rows) std::cout << csv_row(row) << "\n";
        std::cerr << "consistent: " << consistent << "/" << qs.size() << "\n";
    } else {
        if (single) {
            print_analyze_table(rows[0]);
        } else {
            print_sweep_table_header();
            for (const Row& row : rows) print_sweep_table_row(row);
        }
        std::cout << "consistent: " << consistent << "/" << qs.size() << "\n";
    }
    return passed == qs.size() ? kExitVerified : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact genus/fibering certificates for the twist knots J(2,2q)"};
    app.require_subcommand(1);

    Flags flags;
    int analyze_q = 0;
    int qmin = 0, qmax = 0;

    auto add_common = [&flags](CLI::App* cmd) {
        cmd->add_option("--format", flags.format, "Output format")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
        cmd->add_flag("--fox-check", flags.fox, "Also run the Fox-calculus oracle");
        cmd->add_flag("--numeric,!--no-numeric", flags.numeric,
                      "Run the floating-point root layer (default on)");
        cmd->add_option("--tol", flags.tol, "Root-finder tolerance")->capture_default_str();
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Certify a single twist knot");
    analyze->add_option("--q", analyze_q, "Twist parameter q of J(2,2q), nonzero")->required();
    add_common(analyze);

    CLI::App* sweep = app.add_subcommand("sweep", "Certify a range of twist knots");
    sweep->add_option("--q-min", qmin, "Smallest q (inclusive)")->required();
    sweep->add_option("--q-max", qmax, "Largest q (inclusive)")->required();
    add_common(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<int> qs;
    if (analyze->parsed()) {
        if (analyze_q == 0) {
            std::cerr << "usage error: q must be nonzero (J(2,0) is the trivial knot)\n";
            return kExitUsage;
        }
        qs.push_back(analyze_q);
    } else {
        if (qmin > qmax) {
            std::cerr << "usage error: empty range (--q-min > --q-max)\n";
            return kExitUsage;
        }
        for (int q = qmin; q <= qmax; ++q)
            if (q != 0) qs.push_back(q);
        if (qs.empty()) {
            std::cerr << "usage error: range contains only q = 0\n";
            return kExitUsage;
        }
    }

    return run_records(qs, flags);
}
