// colbn -- batch CLI over the colbn C API.
//
// Subcommands: table, total, poly, stats, asympt, saddle, sample, verify.
// Output is CSV (default) or JSON via --format, to stdout or --out PATH.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numeric non-convergence.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "colbn/colbn.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConv = 3;

// Carries a CLI-level failure out of the subcommand handlers.
struct CliExit {
    int code;
    std::string message;
};

void check_api(int rc, const std::string& where) {
    if (rc == COLBN_OK) return;
    int code = kExitVerifyFail;
    if (rc == COLBN_EINVAL || rc == COLBN_ERANGE) code = kExitUsage;
    if (rc == COLBN_ENOCONV) code = kExitNoConv;
    throw CliExit{code, where + ": " + colbn_errstr(rc) + " (" + colbn_last_error() + ")"};
}

// Owned C string from the API.
struct ApiString {
    char* p = nullptr;
    ~ApiString() { colbn_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct ApiTable {
    colbn_table* p = nullptr;
    ~ApiTable() { colbn_table_destroy(p); }
};

ApiTable make_table(unsigned c, unsigned m, unsigned n_max) {
    ApiTable t;
    check_api(colbn_table_create(c, m, n_max, &t.p), "table_create");
    return t;
}

// Row-oriented report that renders as CSV or as a JSON array of objects.
class Report {
public:
    explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(std::vector<json> cells) { rows_.push_back(std::move(cells)); }

    void render(std::ostream& os, const std::string& format) const {
        if (format == "json") {
            json arr = json::array();
            for (const auto& row : rows_) {
                json obj;
                for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = row[i];
                arr.push_back(std::move(obj));
            }
            os << arr.dump(2) << '\n';
            return;
        }
        for (std::size_t i = 0; i < columns_.size(); ++i)
            os << (i ? "," : "") << columns_[i];
        os << '\n';
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << ',';
                if (row[i].is_string())
                    os << row[i].get<std::string>();
                else
                    os << row[i].dump();
            }
            os << '\n';
        }
    }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<json>> rows_;
};

struct OutputOptions {
    std::string format = "csv";
    std::string out_path;

    void attach(CLI::App* cmd, std::vector<std::string> formats = {"csv", "json"}) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "write output to PATH instead of stdout");
    }

    void write(const Report& report) const {
        if (out_path.empty()) {
            report.render(std::cout, format);
            return;
        }
        std::ofstream f(out_path);
        if (!f) throw CliExit{kExitUsage, "cannot open output file " + out_path};
        report.render(f, format);
    }
};

// "a:b", "a:b:step", or "a:b:xK" (geometric); a single "n" is the point range.
std::vector<unsigned> parse_range(const std::string& spec) {
    std::vector<unsigned> out;
    unsigned a = 0, b = 0;
    unsigned long mul = 0, step = 1;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "%u:%u:x%lu%c", &a, &b, &mul, &tail) == 3 && mul >= 2) {
        for (unsigned long n = a; n <= b; n *= mul) out.push_back(static_cast<unsigned>(n));
    } else if (std::sscanf(spec.c_str(), "%u:%u:%lu%c", &a, &b, &step, &tail) == 3 && step >= 1) {
        for (unsigned long n = a; n <= b; n += step) out.push_back(static_cast<unsigned>(n));
    } else if (std::sscanf(spec.c_str(), "%u:%u%c", &a, &b, &tail) == 2) {
        for (unsigned long n = a; n <= b; ++n) out.push_back(static_cast<unsigned>(n));
    } else if (std::sscanf(spec.c_str(), "%u%c", &a, &tail) == 1) {
        out.push_back(a);
    }
    if (out.empty()) throw CliExit{kExitUsage, "empty or malformed range: " + spec};
    return out;
}

/* ----- subcommand handlers ---------------------------------------- */

void run_table(unsigned c, unsigned m, unsigned n, const OutputOptions& out) {
    ApiTable t = make_table(c, m, n);
    Report report({"n", "k", "T"});
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned k = 0; k <= i; ++k) {
            ApiString v;
            check_api(colbn_table_entry(t.p, i, k, &v.p), "table_entry");
            report.add_row({i, k, v.str()});
        }
    out.write(report);
}

void run_total(unsigned c, unsigned m, const std::string& range, const OutputOptions& out) {
    Report report({"n", "T"});
    for (unsigned n : parse_range(range)) {
        ApiString v;
        check_api(colbn_total(c, m, n, &v.p), "total");
        report.add_row({n, v.str()});
    }
    out.write(report);
}

void run_poly(unsigned c, unsigned m, unsigned n, const OutputOptions& out) {
    ApiTable t = make_table(c, m, n);
    unsigned roots = 0, gcd_degree = 0;
    check_api(colbn_poly_negative_roots(t.p, n, &roots, &gcd_degree), "poly_negative_roots");
    int rec_ok = 1, newton_ok = 1;
    if (n >= 1) check_api(colbn_poly_recurrence_ok(t.p, n, &rec_ok), "poly_recurrence");
    if (n >= 2) check_api(colbn_poly_newton_ok(t.p, n, &newton_ok), "poly_newton");

    if (out.format == "json") {
        json obj;
        obj["n"] = n;
        json coeffs = json::array();
        for (unsigned k = 0; k <= n; ++k) {
            ApiString v;
            check_api(colbn_table_entry(t.p, n, k, &v.p), "table_entry");
            coeffs.push_back(v.str());
        }
        obj["coeffs"] = std::move(coeffs);
        obj["distinct_negative_roots"] = roots;
        obj["gcd_degree"] = gcd_degree;
        obj["recurrence_ok"] = rec_ok != 0;
        obj["newton_ok"] = newton_ok != 0;
        if (out.out_path.empty()) {
            std::cout << obj.dump(2) << '\n';
        } else {
            std::ofstream f(out.out_path);
            if (!f) throw CliExit{kExitUsage, "cannot open output file " + out.out_path};
            f << obj.dump(2) << '\n';
        }
    } else {
        Report report({"k", "coeff"});
        for (unsigned k = 0; k <= n; ++k) {
            ApiString v;
            check_api(colbn_table_entry(t.p, n, k, &v.p), "table_entry");
            report.add_row({k, v.str()});
        }
        out.write(report);
    }
    std::cerr << "poly: n=" << n << " distinct_negative_roots=" << roots
              << " gcd_degree=" << gcd_degree << " recurrence_ok=" << rec_ok
              << " newton_ok=" << newton_ok << '\n';
    if (roots != n || gcd_degree != 0 || !rec_ok || !newton_ok)
        throw CliExit{kExitVerifyFail, "poly: certificate failed at n=" + std::to_string(n)};
}

void run_stats(unsigned c, unsigned m, const std::string& range, const OutputOptions& out) {
    std::vector<unsigned> ns = parse_range(range);
    unsigned n_max = 0;
    for (unsigned n : ns) n_max = std::max(n_max, n);
    ApiTable t = make_table(c, m, n_max);
    Report report({"n", "E_rational", "E_float", "V_rational", "V_float", "KS"});
    for (unsigned n : ns) {
        if (n < 1) throw CliExit{kExitUsage, "stats: n must be >= 1"};
        colbn_moments mom{};
        check_api(colbn_moments_direct(t.p, n, &mom), "moments_direct");
        double ks = 0.0;
        int rc = colbn_ks_to_normal(t.p, n, &ks);
        if (rc != COLBN_OK) {
            colbn_moments_clear(&mom);
            check_api(rc, "ks_to_normal");
        }
        report.add_row({n, std::string(mom.e_rational), mom.e,
                        std::string(mom.v_rational), mom.v, ks});
        colbn_moments_clear(&mom);
    }
    out.write(report);
}

void run_asympt(unsigned c, unsigned m, const std::string& range, const OutputOptions& out) {
    Report report({"n", "r", "log_exact", "log_asymptotic", "gap",
                   "res61", "res62", "res63", "res64"});
    for (unsigned n : parse_range(range)) {
        if (n < 3) throw CliExit{kExitUsage, "asympt: n must be >= 3"};
        colbn_log_estimate est{};
        check_api(colbn_log_total_asymptotic(c, m, n, &est), "log_total_asymptotic");
        double log_exact = 0.0;
        check_api(colbn_log_total_exact(c, m, n, &log_exact), "log_total_exact");
        colbn_lemma_residuals lr{};
        check_api(colbn_lemma_residuals_eval(c, m, n, &lr), "lemma_residuals");
        report.add_row({n, est.r, log_exact, est.log_value, est.log_value - log_exact,
                        lr.res61, lr.res62, lr.res63, lr.res64});
    }
    out.write(report);
}

void run_saddle(unsigned c, unsigned m, double x, const OutputOptions& out) {
    double r = 0.0, residual = 0.0;
    check_api(colbn_solve_saddle(c, m, x, &r, &residual), "solve_saddle");
    Report report({"x", "r", "residual"});
    report.add_row({x, r, residual});
    out.write(report);
}

void run_sample(unsigned c, unsigned m, unsigned n, std::uint64_t seed, unsigned count,
                const OutputOptions& out) {
    colbn_sampler* s = nullptr;
    check_api(colbn_sampler_create(c, m, n, seed, &s), "sampler_create");
    std::unique_ptr<colbn_sampler, decltype(&colbn_sampler_destroy)> guard(
        s, &colbn_sampler_destroy);

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.out_path.empty()) {
        file.open(out.out_path);
        if (!file) throw CliExit{kExitUsage, "cannot open output file " + out.out_path};
        os = &file;
    }
    if (out.format == "csv") *os << "n,rank,k,partition\n";
    for (unsigned i = 0; i < count; ++i) {
        ApiString text, rank;
        unsigned k = 0;
        check_api(colbn_sampler_next(s, &text.p, &rank.p, &k), "sampler_next");
        if (out.format == "csv") {
            *os << n << ',' << rank.str() << ',' << k << ',' << text.str() << '\n';
        } else {
            json line = {{"n", n}, {"rank", rank.str()}, {"k", k}, {"partition", text.str()}};
            *os << line.dump() << '\n';
        }
    }
}

/* ----- verify ------------------------------------------------------ */

struct VerifyFailure {
    std::string detail;
};

void verify_pair(unsigned c, unsigned m, unsigned n_max, Report& report) {
    auto fail = [&](const std::string& what) {
        throw VerifyFailure{what + " at c=" + std::to_string(c) + " m=" + std::to_string(m)};
    };
    auto row_status = [&](const std::string& check, bool ok) {
        report.add_row({check, c, m, n_max, ok ? "ok" : "FAIL"});
        return ok;
    };

    ApiTable t = make_table(c, m, n_max + 2);

    // Four counting routes agree.
    bool oracles_ok = true;
    std::vector<std::string> egf_vals;
    {
        size_t egf_len = 0;
        char** egf = nullptr;
        check_api(colbn_egf_series_totals(c, m, n_max, &egf, &egf_len), "egf_series_totals");
        for (size_t i = 0; i < egf_len; ++i) egf_vals.emplace_back(egf[i]);
        colbn_free_strings(egf, egf_len);
    }
    for (unsigned n = 0; n <= n_max && oracles_ok; ++n) {
        ApiString from_table, closed;
        check_api(colbn_table_total(t.p, n, &from_table.p), "table_total");
        check_api(colbn_closed_form_total(c, m, n, &closed.p), "closed_form_total");
        if (from_table.str() != closed.str()) oracles_ok = false;
        if (from_table.str() != egf_vals[n]) oracles_ok = false;
        if (n <= 8) {
            ApiString brute;
            check_api(colbn_brute_force_total(c, m, n, &brute.p), "brute_force_total");
            if (from_table.str() != brute.str()) oracles_ok = false;
        }
    }
    if (!row_status("oracle_equality", oracles_ok)) fail("oracle mismatch");

    // Differential recurrence of the block polynomials.
    bool rec_ok = true;
    for (unsigned n = 1; n <= n_max && rec_ok; ++n) {
        int ok = 0;
        check_api(colbn_poly_recurrence_ok(t.p, n, &ok), "poly_recurrence");
        rec_ok = ok != 0;
    }
    if (!row_status("poly_recurrence", rec_ok)) fail("polynomial recurrence mismatch");

    // Sturm certificates: n distinct negative roots, square-free.
    bool sturm_ok = true;
    for (unsigned n = 1; n <= std::min(n_max, 40u) && sturm_ok; ++n) {
        unsigned roots = 0, gcd_degree = 0;
        check_api(colbn_poly_negative_roots(t.p, n, &roots, &gcd_degree), "poly_roots");
        sturm_ok = roots == n && gcd_degree == 0;
    }
    if (!row_status("sturm_root_count", sturm_ok)) fail("Sturm root count mismatch");

    // Moment identity: direct sums equal the total-ratio form exactly.
    bool moments_ok = true;
    for (unsigned n = 0; n <= n_max && moments_ok; ++n) {
        colbn_moments a{}, b{};
        check_api(colbn_moments_direct(t.p, n, &a), "moments_direct");
        check_api(colbn_moments_ratio(t.p, n, &b), "moments_ratio");
        moments_ok = std::string(a.e_rational) == b.e_rational &&
                     std::string(a.v_rational) == b.v_rational;
        colbn_moments_clear(&a);
        colbn_moments_clear(&b);
    }
    if (!row_status("moment_identity", moments_ok)) fail("moment identity mismatch");

    // Rank/unrank bijection against the brute-force listing.
    bool bij_ok = true;
    for (unsigned n = 0; n <= std::min(n_max, 6u) && bij_ok; ++n) {
        char** listed = nullptr;
        size_t len = 0;
        check_api(colbn_enumerate(c, m, n, &listed, &len), "enumerate");
        ApiString tn;
        check_api(colbn_table_total(t.p, n, &tn.p), "table_total");
        if (std::to_string(len) != tn.str()) bij_ok = false;
        std::set<std::string> seen;
        for (size_t i = 0; i < len && bij_ok; ++i) {
            ApiString rank, back;
            check_api(colbn_rank(t.p, listed[i], &rank.p), "rank");
            check_api(colbn_unrank(t.p, n, rank.p, &back.p), "unrank");
            if (back.str() != listed[i]) bij_ok = false;
            if (!seen.insert(rank.str()).second) bij_ok = false;
        }
        colbn_free_strings(listed, len);
    }
    if (!row_status("bijection_roundtrip", bij_ok)) fail("bijection mismatch");
}

void run_verify(std::vector<std::pair<unsigned, unsigned>> pairs, unsigned n_max,
                const OutputOptions& out) {
    Report report({"check", "c", "m", "n_max", "status"});
    try {
        for (auto [c, m] : pairs) verify_pair(c, m, n_max, report);
    } catch (const VerifyFailure& f) {
        out.write(report);
        throw CliExit{kExitVerifyFail, "verify: " + f.detail};
    }
    out.write(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counts, polynomials, moments, asymptotics and uniform "
                 "sampling for colored B_n set partitions"};
    app.require_subcommand(1);

    unsigned c = 1, m = 1, n = 0, count = 1;
    std::uint64_t seed = 0;
    double x = 1.0;
    std::string range;
    OutputOptions out_table, out_total, out_poly, out_stats, out_asympt, out_saddle,
        out_sample, out_verify;

    auto* cmd_table = app.add_subcommand("table", "count table T_{n,k} up to n");
    cmd_table->add_option("--c", c, "zero-block palette size")->required()->check(CLI::PositiveNumber);
    cmd_table->add_option("--m", m, "non-zero-block palette size")->required()->check(CLI::PositiveNumber);
    cmd_table->add_option("--n", n, "table depth")->required();
    out_table.attach(cmd_table);

    auto* cmd_total = app.add_subcommand("total", "total count T_n");
    cmd_total->add_option("--c", c)->required()->check(CLI::PositiveNumber);
    cmd_total->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    auto* total_n = cmd_total->add_option("--n", range, "n or range a:b[:step|:xK]");
    cmd_total->add_option("--n-range", range, "range a:b[:step|:xK]")->excludes(total_n);
    out_total.attach(cmd_total);

    auto* cmd_poly = app.add_subcommand("poly", "block-count polynomial coefficients "
                                                "and root certificate");
    cmd_poly->add_option("--c", c)->required()->check(CLI::PositiveNumber);
    cmd_poly->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    cmd_poly->add_option("--n", n, "degree")->required();
    out_poly.attach(cmd_poly);

    auto* cmd_stats = app.add_subcommand("stats", "exact E, V and KS distance to "
                                                  "the fitted normal");
    cmd_stats->add_option("--c", c)->required()->check(CLI::PositiveNumber);
    cmd_stats->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    auto* stats_n = cmd_stats->add_option("--n", range, "n or range");
    cmd_stats->add_option("--n-range", range)->excludes(stats_n);
    out_stats.attach(cmd_stats);

    auto* cmd_asympt = app.add_subcommand("asympt", "saddle point, exact vs asymptotic "
                                                    "log totals, spacing residuals");
    cmd_asympt->add_option("--c", c)->required()->check(CLI::PositiveNumber);
    cmd_asympt->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    auto* asympt_n = cmd_asympt->add_option("--n", range, "n or range");
    cmd_asympt->add_option("--n-range", range)->excludes(asympt_n);
    out_asympt.attach(cmd_asympt);

    auto* cmd_saddle = app.add_subcommand("saddle", "solve r (e^{mr} + c) = x");
    cmd_saddle->add_option("--c", c, "palette size (0 allowed)")->required();
    cmd_saddle->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    cmd_saddle->add_option("--x", x, "right-hand side, >= 1")->required();
    out_saddle.attach(cmd_saddle);

    auto* cmd_sample = app.add_subcommand("sample", "exact-uniform random partitions");
    cmd_sample->add_option("--c", c)->required()->check(CLI::PositiveNumber);
    cmd_sample->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    cmd_sample->add_option("--n", n)->required();
    cmd_sample->add_option("--seed", seed, "PRNG seed (SplitMix64)")->capture_default_str();
    cmd_sample->add_option("--count", count, "number of draws")->check(CLI::PositiveNumber)
        ->capture_default_str();
    out_sample.format = "jsonl";
    out_sample.attach(cmd_sample, {"jsonl", "csv"});

    auto* cmd_verify = app.add_subcommand("verify", "cross-check all counting routes "
                                                    "and identities");
    auto* vc = cmd_verify->add_option("--c", c)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--m", m)->check(CLI::PositiveNumber)->needs(vc);
    vc->needs(cmd_verify->get_option("--m"));
    unsigned verify_n_max = 8;
    cmd_verify->add_option("--n-max", verify_n_max, "depth of the checks")
        ->capture_default_str();
    out_verify.attach(cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_table->parsed()) run_table(c, m, n, out_table);
        if (cmd_total->parsed()) {
            if (range.empty()) throw CliExit{kExitUsage, "total: --n or --n-range required"};
            run_total(c, m, range, out_total);
        }
        if (cmd_poly->parsed()) run_poly(c, m, n, out_poly);
        if (cmd_stats->parsed()) {
            if (range.empty()) throw CliExit{kExitUsage, "stats: --n or --n-range required"};
            run_stats(c, m, range, out_stats);
        }
        if (cmd_asympt->parsed()) {
            if (range.empty()) throw CliExit{kExitUsage, "asympt: --n or --n-range required"};
            run_asympt(c, m, range, out_asympt);
        }
        if (cmd_saddle->parsed()) run_saddle(c, m, x, out_saddle);
        if (cmd_sample->parsed()) run_sample(c, m, n, seed, count, out_sample);
        if (cmd_verify->parsed()) {
            std::vector<std::pair<unsigned, unsigned>> pairs;
            if (vc->count())
                pairs = {{c, m}};
            else
                pairs = {{1, 1}, {1, 2}, {2, 2}, {3, 1}};
            run_verify(pairs, verify_n_max, out_verify);
        }
    } catch (const CliExit& e) {
        std::cerr << "colbn: " << e.message << '\n';
        return e.code;
    }
    return kExitOk;
}
