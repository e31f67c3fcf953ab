// det: exact determinants by Dodgson condensation with symbolic repair of
// interior zeros.
//
//   det --input m.csv [--strategy perturb] [--verify] [--trace] [--json out.json]
//   det --demo
//   det --export-corpus DIR        (or: det export --corpus DIR)

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dodgson/condensation.hpp"
#include "dodgson/corpus.hpp"
#include "dodgson/errors.hpp"
#include "dodgson/oracle.hpp"
#include "dodgson/repair.hpp"
#include "dodgson/report.hpp"

namespace {

using namespace dodgson;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MatrixFormat resolve_format(const std::string& flag, const std::string& path) {
    if (flag == "csv") return MatrixFormat::Csv;
    if (flag == "json") return MatrixFormat::Json;
    if (!flag.empty()) throw Error("unknown format '" + flag + "' (expected csv or json)");
    return std::filesystem::path(path).extension() == ".json" ? MatrixFormat::Json : MatrixFormat::Csv;
}

void print_matrix(std::ostream& os, const SymMatrix& m) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            cells.push_back(m(r, c).to_string());
            width = std::max(width, cells.back().size());
        }
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
        os << "  [";
        for (std::size_t c = 0; c < m.size(); ++c) {
            os << (c ? "  " : " ") << std::setw(static_cast<int>(width)) << cells[r * m.size() + c];
        }
        os << " ]\n";
    }
}

void print_summary(std::ostream& os, const Report& report, const CondensationTrace& trace, bool show_trace) {
    os << "n = " << report.n << ", strategy = " << strategy_name(report.strategy) << '\n';
    if (show_trace) {
        for (const auto& level : trace.levels) {
            os << "A^(" << level.size() << "):\n";
            print_matrix(os, level);
        }
    }
    const RepairPlan& plan = report.repair;
    if (!plan.edits.empty() || plan.rounds > 0 || plan.sign != 1) {
        os << "repair: " << plan.rounds << " round(s)";
        if (plan.strategy == Strategy::CyclicShift) {
            os << ", shift (" << plan.row_shift << "," << plan.col_shift << "), sign " << plan.sign;
        }
        os << '\n';
        for (const auto& e : plan.edits) {
            os << "  " << edit_kind_name(e.kind) << " level " << e.level << " (" << e.position.row << ","
               << e.position.col << "): " << e.before << " -> " << e.after << '\n';
        }
        if (!plan.limit_point.empty()) {
            os << "  limit:";
            for (const auto& [var, value] : plan.limit_point) os << ' ' << var.name() << "->" << value;
            os << '\n';
        }
    }
    os << "A^(1) = " << report.final_polynomial << '\n';
    os << "multiplications = " << report.mult_count << " (predicted " << report.predicted_mult_count
       << "), divisions = " << report.div_count << '\n';
}

int compute(const std::string& input, const std::string& format_flag, const std::string& strategy_flag, bool verify,
            bool show_trace, const std::string& json_path, std::size_t threads) {
    const SymMatrix a = parse_matrix(read_file(input), resolve_format(format_flag, input));
    const Strategy strategy = strategy_from_name(strategy_flag);

    RepairOptions options;
    options.engine.threads = static_cast<unsigned>(threads);
    const RepairOutcome outcome = auto_repair(a, strategy, options);
    const Report report = make_report(a, strategy, outcome, verify, show_trace);

    print_summary(std::cout, report, outcome.trace, show_trace);

    if (!json_path.empty()) {
        const std::string doc = report_to_json(report);
        if (json_path == "-") {
            std::cout << doc << '\n';
        } else {
            std::ofstream(json_path) << doc << '\n';
        }
    }

    std::cout << "det = " << report.determinant;
    if (!report.match) {
        std::cout << '\n';
        return kExitOk;
    }
    if (*report.match) {
        std::cout << " (verified, oracle " << *report.oracle_determinant << ")\n";
        return kExitOk;
    }
    std::cout << " (MISMATCH, oracle " << *report.oracle_determinant << ")\n";
    if (strategy == Strategy::IntermediateReplace) return kExitMismatch;
    std::cerr << "error: sound strategy disagrees with the oracle\n";
    return kExitError;
}

int demo() {
    const std::vector<Strategy> strategies{Strategy::CyclicShift, Strategy::RowOpClear, Strategy::PerturbOriginal,
                                           Strategy::ReplaceEntry, Strategy::ReplaceZeros};
    std::cout << std::left << std::setw(8) << "matrix" << std::setw(10) << "det";
    for (Strategy s : strategies) std::cout << std::setw(9) << strategy_name(s);
    std::cout << "intermediate-unsound\n";

    int failures = 0;
    for (const auto& entry : corpus_entries()) {
        const Rational expected = entry.expected_det.value_or(det_bareiss(entry.matrix));
        std::cout << std::setw(8) << entry.name << std::setw(10) << expected.to_string();
        for (Strategy s : strategies) {
            std::string cell;
            try {
                cell = auto_repair(entry.matrix, s).value == expected ? "ok" : "FAIL";
            } catch (const StrategyInapplicable&) {
                cell = "n/a";
            } catch (const Error&) {
                cell = "FAIL";
            }
            if (cell == "FAIL") ++failures;
            std::cout << std::setw(9) << cell;
        }
        try {
            const auto io = intermediate_replace_unsound(entry.matrix);
            std::cout << io.value << (io.sound ? " (sound)" : " (unsound)");
        } catch (const InexactDivision&) {
            std::cout << "inexact division";
        }
        std::cout << '\n';
    }
    std::cout << (failures == 0 ? "all sound strategies agree with the published values\n"
                                : std::to_string(failures) + " failure(s)\n");
    return failures == 0 ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact determinants by Dodgson condensation with symbolic zero repair"};
    app.set_version_flag("--version", "0.1.0");

    std::string input;
    std::string format;
    std::string strategy = "perturb";
    bool verify = false;
    bool show_trace = false;
    bool run_demo = false;
    std::string json_path;
    std::string export_dir;
    std::size_t threads = 1;

    app.add_option("--input", input, "Matrix file (CSV or JSON)");
    app.add_option("--format", format, "csv or json; inferred from the extension by default")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--strategy", strategy, "Repair strategy")
        ->check(CLI::IsMember({"fail", "shift", "rowops", "perturb", "replace", "zeros", "intermediate-unsound"}));
    app.add_flag("--verify", verify, "Check the result against the Bareiss oracle");
    app.add_flag("--trace", show_trace, "Print every condensation level");
    app.add_option("--json", json_path, "Write the JSON report to this path ('-' for stdout)");
    app.add_flag("--demo", run_demo, "Run the built-in corpus through every sound strategy");
    app.add_option("--export-corpus", export_dir, "Write the built-in corpus as CSV + manifest.json");
    app.add_option("--threads", threads, "Worker threads per condensation level")->check(CLI::Range(1, 256));

    auto* export_cmd = app.add_subcommand("export", "Export the built-in corpus");
    std::string export_corpus_dir;
    export_cmd->add_option("--corpus", export_corpus_dir, "Target directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    try {
        if (export_cmd->parsed()) export_dir = export_corpus_dir;
        if (!export_dir.empty()) {
            std::cout << "wrote " << export_corpus(export_dir) << '\n';
            return kExitOk;
        }
        if (run_demo) return demo();
        if (input.empty()) {
            std::cerr << "error: --input is required (or use --demo / --export-corpus)\n";
            return kExitError;
        }
        return compute(input, format, strategy, verify, show_trace, json_path, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
