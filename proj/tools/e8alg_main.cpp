// Command-line front end: bracket evaluation, verification sweeps, and
// deterministic exports for the f4 / e8 / e8-split / so16 tables.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error.
// All stdout output is byte-identical across identical invocations;
// timing and progress go to stderr.

#include "e8alg/export_io.hpp"
#include "e8alg/json_io.hpp"
#include "e8alg/killing.hpp"
#include "e8alg/roots.hpp"
#include "e8alg/structure_table.hpp"
#include "e8alg/verify.hpp"
#include "e8alg/version.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace e8alg;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element inputs are file paths, inline JSON (first char '{'), or "-"
// for standard input.
Json read_element_json(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else if (!arg.empty() && arg.front() == '{') {
        text = arg;
    } else {
        std::ifstream in(arg, std::ios::binary);
        if (!in) throw UsageError("cannot open input file \"" + arg + "\"");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

int cmd_bracket(const std::string& algebra, const std::string& lhs_arg,
                const std::string& rhs_arg) {
    const AlgebraId id = parse_algebra(algebra);
    const Json lhs = read_element_json(lhs_arg);
    const Json rhs = read_element_json(rhs_arg);
    Json out;
    switch (id) {
        case AlgebraId::f4:
            out = jsonio::encode(bracket(jsonio::decode_f4(lhs, "lhs"), jsonio::decode_f4(rhs, "rhs")));
            break;
        case AlgebraId::e8:
            out = jsonio::encode(bracket(jsonio::decode_e8(lhs, "lhs"), jsonio::decode_e8(rhs, "rhs")));
            break;
        case AlgebraId::e8_split:
            out = jsonio::encode(
                split_bracket(jsonio::decode_e8(lhs, "lhs"), jsonio::decode_e8(rhs, "rhs")));
            break;
        case AlgebraId::so16:
            out = jsonio::encode(
                bracket(jsonio::decode_so16(lhs, "lhs"), jsonio::decode_so16(rhs, "rhs")));
            break;
    }
    std::cout << dump_json(out);
    return kExitOk;
}

ProgressFn stderr_progress(const std::string& label) {
    auto last = std::make_shared<std::atomic<int>>(-1);
    return [label, last](std::uint64_t done, std::uint64_t total) {
        const int pct = static_cast<int>(100 * done / total);
        int prev = last->load();
        if (pct / 5 > prev / 5 && last->compare_exchange_strong(prev, pct))
            std::cerr << label << ": " << pct << "%\n";
    };
}

/// Killing-form diagonal; rejects (would be a bug for these algebras)
/// non-diagonal Killing matrices rather than silently checking less.
std::vector<Rational> killing_diagonal(const StructureTable& table) {
    const MatQ b = killing_form(table);
    std::vector<Rational> diag(static_cast<std::size_t>(b.rows()));
    for (int i = 0; i < b.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j)
            if (i != j && !b.at(i, j).is_zero())
                throw std::runtime_error("Killing form is not diagonal on the canonical basis");
        diag[static_cast<std::size_t>(i)] = b.at(i, i);
    }
    return diag;
}

std::vector<VerificationReport> run_checks(const StructureTable& table, const std::string& check,
                                           bool exhaustive, std::uint64_t samples,
                                           std::uint64_t seed, int jobs) {
    std::vector<VerificationReport> reports;
    const AlgebraId id = table.algebra;

    if (check == "jacobi" || check == "all") {
        if (exhaustive) {
            SweepOptions opts;
            opts.jobs = jobs;
            if (table.dim >= 200)
                opts.progress = stderr_progress(std::string("jacobi ") + algebra_name(id));
            reports.push_back(verify_jacobi_exhaustive(table, opts));
        } else {
            reports.push_back(verify_jacobi_sampled(table, samples, seed));
        }
    }
    if (check == "invariance" || check == "all") {
        if (id == AlgebraId::e8)
            reports.push_back(verify_invariance(table, e8_metric_diagonal(), "scalar-product"));
        else
            reports.push_back(verify_invariance(table, killing_diagonal(table), "killing"));
    }
    if (check == "automorphisms" || check == "all") {
        switch (id) {
            case AlgebraId::f4:
                reports.push_back(verify_automorphism(table, f4_tau_columns(), "tau"));
                break;
            case AlgebraId::e8:
            case AlgebraId::e8_split:
                reports.push_back(verify_automorphism(table, e8_tau_columns(), "tau"));
                reports.push_back(
                    verify_automorphism(table, e8_cartan_involution_columns(), "cartan-involution"));
                break;
            case AlgebraId::so16: {
                // Lemma-type block embedding into 16x16 commutators.
                VerificationReport rep;
                rep.check = "automorphism(so16-embedding)";
                rep.algebra = algebra_name(id);
                rep.mode = "exhaustive";
                rep.cases = 120ull * 120ull;
                for (int i = 0; i < 120; ++i)
                    for (int j = 0; j < 120; ++j) {
                        const So16Element x = so16::basis_element(i);
                        const So16Element y = so16::basis_element(j);
                        const So16Element b = bracket(x, y);
                        const Mat16 lhs = so16_embed(b.a, b.x);
                        const Mat16 rhs =
                            commutator(so16_embed(x.a, x.x), so16_embed(y.a, y.x));
                        if (!(lhs == rhs))
                            rep.failures.push_back({{i, j}, "embedding does not commute"});
                    }
                reports.push_back(std::move(rep));
                break;
            }
        }
    }
    if (check == "simplicity" || check == "all")
        reports.push_back(simplicity_certificate(table).report);
    return reports;
}

void print_report_text(const VerificationReport& r) {
    std::cout << "check=" << r.check << " algebra=" << r.algebra << " mode=" << r.mode
              << " cases=" << r.cases << " result=" << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& note : r.notes) std::cout << "  " << note << "\n";
    if (!r.failures.empty()) {
        const auto& f = r.failures.front();
        std::cout << "  first counterexample: indices=[";
        for (std::size_t i = 0; i < f.indices.size(); ++i)
            std::cout << (i ? "," : "") << f.indices[i];
        std::cout << "] " << f.detail << "\n";
        std::cout << "  failures=" << r.failures.size() << "\n";
    }
}

int cmd_verify(const std::string& algebra, const std::string& check, const std::string& mode,
               std::uint64_t samples, std::uint64_t seed, int jobs, const std::string& format,
               const std::string& out_path) {
    if (check != "jacobi" && check != "invariance" && check != "automorphisms" &&
        check != "simplicity" && check != "all")
        throw UsageError("unknown check \"" + check +
                         "\" (expected jacobi, invariance, automorphisms, simplicity or all)");
    if (mode != "exhaustive" && mode != "sample")
        throw UsageError("unknown mode \"" + mode + "\" (expected exhaustive or sample)");
    if (mode == "sample" && samples < 1) throw UsageError("sample mode requires --samples >= 1");

    const AlgebraId id = parse_algebra(algebra);
    const auto t0 = std::chrono::steady_clock::now();
    const StructureTable& table = table_for(id);
    const auto reports = run_checks(table, check, mode == "exhaustive", samples, seed, jobs);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    Json json_reports = Json::array();
    for (const auto& r : reports) json_reports.push_back(jsonio::encode(r));
    if (format == "json") {
        std::cout << dump_json(json_reports);
    } else {
        for (const auto& r : reports) print_report_text(r);
    }
    if (!out_path.empty()) write_file(out_path, dump_json(json_reports));
    std::cerr << "verify " << algebra << " " << check << ": " << wall << "s\n";

    for (const auto& r : reports)
        if (!r.passed()) return kExitVerifyFailed;
    return kExitOk;
}

int cmd_export(const std::string& what, const std::string& algebra, const std::string& format,
               const std::string& out_path) {
    if (out_path.empty()) throw UsageError("export requires --out");
    const AlgebraId id = parse_algebra(algebra);

    std::string content;
    if (what == "structure-constants") {
        const StructureTable& t = table_for(id);
        if (format == "json")
            content = dump_json(table_to_json(t));
        else if (format == "csv")
            content = table_to_csv(t);
        else
            throw UsageError("structure-constants supports json or csv");
    } else if (what == "killing") {
        if (format != "csv") throw UsageError("killing exports as csv");
        content = matrix_to_csv(killing_form(table_for(id)));
    } else if (what == "roots") {
        if (format != "json") throw UsageError("roots export as json");
        if (id != AlgebraId::e8) throw UsageError("roots are extracted from the compact e8");
        content = dump_json(roots_to_json(cartan_and_roots(table_for(id))));
    } else if (what == "basis") {
        if (format != "json") throw UsageError("basis exports as json");
        content = dump_json(basis_to_json(table_for(id)));
    } else {
        throw UsageError("unknown export \"" + what +
                         "\" (expected structure-constants, killing, roots or basis)");
    }
    write_file(out_path, content);
    return kExitOk;
}

int cmd_info(const std::string& algebra) {
    const AlgebraId id = parse_algebra(algebra);
    const StructureTable& t = table_for(id);
    const Signature sig = signature(killing_form(t));

    std::cout << "algebra: " << algebra_name(id) << "\n";
    std::cout << "dim: " << t.dim << "\n";
    std::cout << "basis layout:";
    // contiguous runs of label prefixes
    std::string prev;
    int run = 0;
    const auto flush = [&] {
        if (run) std::cout << " " << prev << "[" << run << "]";
    };
    for (const auto& label : t.basis_labels) {
        const std::string prefix = label.substr(0, label.find(':'));
        if (prefix != prev) {
            flush();
            prev = prefix;
            run = 0;
        }
        ++run;
    }
    flush();
    std::cout << "\n";
    std::cout << "nonzero structure constants (i<j): " << t.entries.size() << "\n";
    std::cout << "killing signature: (" << sig.plus << "," << sig.minus << "," << sig.zero
              << ")\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification of f4, e8, e8(8) and so(16) "
                 "over octonions and oct-octonions"};
    app.set_version_flag("--version", e8alg::kVersion);
    app.require_subcommand(1);

    std::string algebra = "e8";
    std::string check = "jacobi";
    std::string mode = "exhaustive";
    std::string format;
    std::string out_path;
    std::string lhs_arg, rhs_arg, what;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    int jobs = 0;

    auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two elements (JSON in, JSON out)");
    bracket_cmd->add_option("lhs", lhs_arg, "left element: file, inline JSON, or -")->required();
    bracket_cmd->add_option("rhs", rhs_arg, "right element: file, inline JSON, or -")->required();
    bracket_cmd->add_option("--algebra", algebra, "f4 | e8 | e8-split | so16");

    auto* verify_cmd = app.add_subcommand("verify", "run verification sweeps");
    verify_cmd->add_option("algebra", algebra, "f4 | e8 | e8-split | so16");
    verify_cmd->add_option("check", check, "jacobi | invariance | automorphisms | simplicity | all");
    verify_cmd->add_option("--algebra", algebra, "f4 | e8 | e8-split | so16");
    verify_cmd->add_option("--check", check, "check to run");
    verify_cmd->add_option("--mode", mode, "exhaustive | sample");
    verify_cmd->add_option("--samples", samples, "sample count for --mode sample");
    verify_cmd->add_option("--seed", seed, "seed for sampled mode");
    verify_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    verify_cmd->add_option("--format", format, "text (default) | json");
    verify_cmd->add_option("--out", out_path, "also write the JSON report to a file");

    auto* export_cmd = app.add_subcommand("export", "write tables and derived data to files");
    export_cmd->add_option("what", what, "structure-constants | killing | roots | basis")
        ->required();
    export_cmd->add_option("algebra", algebra, "f4 | e8 | e8-split | so16");
    export_cmd->add_option("format", format, "json | csv");
    export_cmd->add_option("--format", format, "json | csv");
    export_cmd->add_option("--out", out_path, "output path");

    auto* info_cmd = app.add_subcommand("info", "dimension, basis layout, table size, signature");
    info_cmd->add_option("algebra", algebra, "f4 | e8 | e8-split | so16");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bracket_cmd->parsed()) return cmd_bracket(algebra, lhs_arg, rhs_arg);
        if (verify_cmd->parsed())
            return cmd_verify(algebra, check, mode, samples, seed, jobs, format, out_path);
        if (export_cmd->parsed()) {
            if (format.empty()) format = "json";
            return cmd_export(what, algebra, format, out_path);
        }
        if (info_cmd->parsed()) return cmd_info(algebra);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const e8alg::DecodeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const e8alg::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
