#include "circnorm/circnorm.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

using circnorm::Family;

std::vector<Family> parse_families_or_throw(const std::vector<std::string>& names) {
    if (names.empty())
        return {circnorm::all_families.begin(), circnorm::all_families.end()};
    std::vector<Family> out;
    for (const auto& name : names) {
        auto f = circnorm::parse_family(name);
        if (!f) throw std::invalid_argument("unknown family name: " + name);
        out.push_back(*f);
    }
    return out;
}

std::pair<int, int> parse_range_or_throw(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("malformed range '" + text + "', expected lo..hi");
    int lo = 0, hi = 0;
    try {
        std::size_t used = 0;
        lo = std::stoi(text.substr(0, sep), &used);
        if (used != sep) throw std::invalid_argument("");
        const std::string rest = text.substr(sep + 2);
        hi = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed range '" + text + "', expected lo..hi");
    }
    if (lo < 1 || hi < lo)
        throw std::invalid_argument("range must satisfy 1 <= lo <= hi, got " + text);
    return {lo, hi};
}

circnorm::DftKernel parse_kernel(const std::string& name) {
    return name == "fast" ? circnorm::DftKernel::Fast : circnorm::DftKernel::Direct;
}

void emit(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::invalid_argument("cannot open output path: " + output_path);
    out << payload;
    if (!out.flush()) throw std::invalid_argument("cannot write output path: " + output_path);
}

std::string json_payload(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// Median wall-clock microseconds over reps runs of fn.
template <typename Fn>
double median_us(int reps, Fn&& fn) {
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(reps));
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    if (times.size() % 2 == 1) return times[mid];
    return 0.5 * (times[mid - 1] + times[mid]);
}

struct BenchRow {
    int n;
    double naive_matvec_us;
    double conv_matvec_us;
    double direct_dft_us;
    double fast_dft_us;
};

std::vector<BenchRow> run_bench(const std::vector<int>& sizes, int reps) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<BenchRow> rows;
    for (int n : sizes) {
        if (n < 1) throw std::invalid_argument("bench sizes must be positive");
        std::vector<double> row(static_cast<std::size_t>(n)), vec(static_cast<std::size_t>(n));
        for (auto& x : row) x = dist(rng);
        for (auto& x : vec) x = dist(rng);
        const auto c = circnorm::Circulant::from_real(row);

        volatile double sink = 0.0; // keep the optimizer from dropping the work
        BenchRow b{n, 0, 0, 0, 0};
        b.naive_matvec_us = median_us(reps, [&] {
            sink = circnorm::matvec(c, vec, circnorm::MatvecMethod::Naive)[0];
        });
        b.conv_matvec_us = median_us(reps, [&] {
            sink = circnorm::matvec(c, vec, circnorm::MatvecMethod::Convolution,
                                    circnorm::DftKernel::Fast)[0];
        });
        b.direct_dft_us = median_us(reps, [&] {
            sink = circnorm::eigenvalues(c, circnorm::DftKernel::Direct)[0].real();
        });
        b.fast_dft_us = median_us(reps, [&] {
            sink = circnorm::eigenvalues(c, circnorm::DftKernel::Fast)[0].real();
        });
        (void)sink;
        rows.push_back(b);
    }
    return rows;
}

std::string format_us(double us) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", us);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verifier for closed-form spectral norms of Fibonacci/Lucas circulants"};
    app.require_subcommand(1);
    // Global options (--format, --output, --spectral-tol) may appear after
    // the subcommand name.
    app.fallthrough();

    std::string format = "markdown";
    auto* format_opt = app.add_option("--format", format, "Output format")
                           ->check(CLI::IsMember({"json", "csv", "markdown"}));
    std::string output_path;
    app.add_option("--output", output_path, "Write the report to a file instead of stdout");
    circnorm::Tolerances tol;
    app.add_option("--spectral-tol", tol.spectral_rel,
                   "Relative tolerance for the float spectral route");

    auto* cmd_table3 = app.add_subcommand(
        "table3", "Recompute the published norm grid and annotate discrepancies");

    auto* cmd_verify =
        app.add_subcommand("verify", "Cross-validate families at one order");
    std::vector<std::string> verify_families;
    cmd_verify->add_option("--family", verify_families,
                           "Family name (repeatable; default all)");
    int verify_n = 0;
    cmd_verify->add_option("--n", verify_n, "Matrix order")->required();
    bool verify_no_float = false;
    cmd_verify->add_flag("--no-float", verify_no_float, "Skip the floating spectral route");

    auto* cmd_scan = app.add_subcommand("scan", "Verify families over a range of orders");
    std::vector<std::string> scan_families;
    cmd_scan->add_option("--families", scan_families, "Comma-separated family names (default all)")
        ->delimiter(',');
    std::string scan_range = "1..200";
    cmd_scan->add_option("--range", scan_range, "Order range lo..hi (default 1..200)");
    int scan_float_max = circnorm::default_float_max_order;
    cmd_scan->add_option("--float-max", scan_float_max,
                         "Largest order for the float route (default 70)");

    auto* cmd_row = app.add_subcommand("row", "Print a family's first row");
    std::string row_family;
    cmd_row->add_option("--family", row_family, "Family name")->required();
    int row_n = 0;
    cmd_row->add_option("--n", row_n, "Matrix order")->required();

    auto* cmd_eig = app.add_subcommand("eig", "Print a family circulant's spectrum");
    std::string eig_family;
    cmd_eig->add_option("--family", eig_family, "Family name")->required();
    int eig_n = 0;
    cmd_eig->add_option("--n", eig_n, "Matrix order")->required();
    std::string eig_kernel = "direct";
    cmd_eig->add_option("--kernel", eig_kernel, "Transform kernel")
        ->check(CLI::IsMember({"direct", "fast"}));

    auto* cmd_bench = app.add_subcommand(
        "bench", "Time naive vs convolution matvec and direct vs fast transforms");
    std::vector<int> bench_sizes{64, 256, 1024, 4096};
    cmd_bench->add_option("--sizes", bench_sizes, "Orders to time")->delimiter(',');
    int bench_reps = 5;
    cmd_bench->add_option("--reps", bench_reps, "Repetitions per measurement (median taken)")
        ->check(CLI::Range(5, 10000));

    auto* cmd_catalog =
        app.add_subcommand("catalog", "Dump the identity catalog (errata report)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::string payload;
        bool flagged = false;

        if (cmd_table3->parsed()) {
            const auto audit = circnorm::reproduce_table3();
            flagged = !audit.discrepancies().empty();
            if (format == "json") payload = json_payload(circnorm::to_json(audit));
            else if (format == "csv") payload = circnorm::to_csv(audit);
            else payload = circnorm::to_markdown(audit);
        } else if (cmd_verify->parsed()) {
            const auto families = parse_families_or_throw(verify_families);
            std::vector<circnorm::VerificationReport> reports;
            for (Family f : families)
                reports.push_back(circnorm::verify_family(f, verify_n, tol, !verify_no_float));
            for (const auto& r : reports)
                if (r.outcome != circnorm::Outcome::Pass) flagged = true;
            if (format == "json") {
                payload = reports.size() == 1
                              ? json_payload(circnorm::to_json(reports[0]))
                              : json_payload(circnorm::to_json(
                                    std::span<const circnorm::VerificationReport>(reports)));
            } else if (format == "csv") {
                payload = circnorm::to_csv(std::span<const circnorm::VerificationReport>(reports));
            } else {
                payload =
                    circnorm::to_markdown(std::span<const circnorm::VerificationReport>(reports));
            }
        } else if (cmd_scan->parsed()) {
            const auto families = parse_families_or_throw(scan_families);
            const auto [lo, hi] = parse_range_or_throw(scan_range);
            const auto report = circnorm::scan(families, lo, hi, tol, scan_float_max);
            for (const auto& s : report.summary)
                if (s.flagged > 0) flagged = true;
            if (format == "json") payload = json_payload(circnorm::to_json(report));
            else if (format == "csv") payload = circnorm::to_csv(report);
            else payload = circnorm::to_markdown(report);
        } else if (cmd_row->parsed()) {
            const auto f = circnorm::parse_family(row_family);
            if (!f) throw std::invalid_argument("unknown family name: " + row_family);
            const auto row = circnorm::family_first_row(*f, row_n);
            if (format == "json") {
                nlohmann::json j;
                j["family"] = circnorm::family_name(*f);
                j["n"] = row_n;
                nlohmann::json entries = nlohmann::json::array();
                for (const auto& x : row) entries.push_back(x.str());
                j["row"] = entries;
                payload = json_payload(j);
            } else if (format == "csv") {
                payload = "family,n,i,entry\n";
                for (std::size_t i = 0; i < row.size(); ++i)
                    payload += circnorm::family_name(*f) + ',' + std::to_string(row_n) + ',' +
                               std::to_string(i) + ',' + row[i].str() + '\n';
            } else {
                payload = "| i | entry |\n|---|---|\n";
                for (std::size_t i = 0; i < row.size(); ++i)
                    payload += "| " + std::to_string(i) + " | " + row[i].str() + " |\n";
            }
        } else if (cmd_eig->parsed()) {
            const auto f = circnorm::parse_family(eig_family);
            if (!f) throw std::invalid_argument("unknown family name: " + eig_family);
            const auto c = circnorm::family_circulant(*f, eig_n);
            const auto kernel = parse_kernel(eig_kernel);
            const auto ev = circnorm::eigenvalues(c, kernel);
            double norm = 0.0;
            for (const auto& v : ev) norm = std::max(norm, std::abs(v));
            if (format == "json") {
                nlohmann::json j;
                j["family"] = circnorm::family_name(*f);
                j["n"] = eig_n;
                j["kernel"] = eig_kernel;
                j["spectral_norm"] = norm;
                nlohmann::json values = nlohmann::json::array();
                for (std::size_t i = 0; i < ev.size(); ++i)
                    values.push_back({{"j", i},
                                      {"re", ev[i].real()},
                                      {"im", ev[i].imag()},
                                      {"abs", std::abs(ev[i])}});
                j["eigenvalues"] = values;
                payload = json_payload(j);
            } else if (format == "csv") {
                payload = "j,re,im,abs\n";
                char buf[128];
                for (std::size_t i = 0; i < ev.size(); ++i) {
                    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", i, ev[i].real(),
                                  ev[i].imag(), std::abs(ev[i]));
                    payload += buf;
                }
            } else {
                payload = "| j | re | im | abs |\n|---|---|---|---|\n";
                char buf[128];
                for (std::size_t i = 0; i < ev.size(); ++i) {
                    std::snprintf(buf, sizeof buf, "| %zu | %.12g | %.12g | %.12g |\n", i,
                                  ev[i].real(), ev[i].imag(), std::abs(ev[i]));
                    payload += buf;
                }
                std::snprintf(buf, sizeof buf, "\nSpectral norm: %.12g\n", norm);
                payload += buf;
            }
        } else if (cmd_bench->parsed()) {
            const auto rows = run_bench(bench_sizes, bench_reps);
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& b : rows)
                    arr.push_back({{"n", b.n},
                                   {"naive_matvec_us", b.naive_matvec_us},
                                   {"conv_matvec_us", b.conv_matvec_us},
                                   {"direct_dft_us", b.direct_dft_us},
                                   {"fast_dft_us", b.fast_dft_us}});
                payload = json_payload(arr);
            } else if (format == "csv") {
                payload = "n,naive_matvec_us,conv_matvec_us,direct_dft_us,fast_dft_us\n";
                for (const auto& b : rows)
                    payload += std::to_string(b.n) + ',' + format_us(b.naive_matvec_us) + ',' +
                               format_us(b.conv_matvec_us) + ',' + format_us(b.direct_dft_us) +
                               ',' + format_us(b.fast_dft_us) + '\n';
            } else {
                payload =
                    "| n | naive matvec (us) | conv matvec (us) | direct dft (us) | fast dft (us) "
                    "|\n|---|---|---|---|---|\n";
                for (const auto& b : rows)
                    payload += "| " + std::to_string(b.n) + " | " + format_us(b.naive_matvec_us) +
                               " | " + format_us(b.conv_matvec_us) + " | " +
                               format_us(b.direct_dft_us) + " | " + format_us(b.fast_dft_us) +
                               " |\n";
            }
        } else if (cmd_catalog->parsed()) {
            // JSON is this report's canonical form; honor --format only when given.
            if (format_opt->count() == 0 || format == "json")
                payload = json_payload(circnorm::catalog_to_json());
            else if (format == "csv") payload = circnorm::catalog_to_csv();
            else payload = circnorm::catalog_to_markdown();
        }

        emit(payload, output_path);
        return flagged ? 1 : 0;
    } catch (const circnorm::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
