// Acceptance suite: runs every acceptance criterion at its stated sweep size
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "polarcg/cli.hpp"
#include "polarcg/table.hpp"
#include "polarcg/verify.hpp"

namespace {

int failures = 0;

void report(int number, const std::string& name, bool passed, double seconds,
            const std::string& detail = "") {
    std::cout << "criterion " << number << " [" << name << "]: "
              << (passed ? "PASS" : "FAIL") << " (" << seconds << " s)";
    if (!detail.empty()) std::cout << " " << detail;
    std::cout << "\n" << std::flush;
    if (!passed) ++failures;
}

template <typename Fn>
double timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string summary(const polarcg::verify::VerifySuiteResult& result) {
    std::ostringstream out;
    out << result.cases << " cases, " << result.exact_matches << " exact, "
        << result.magnitude_only << " magnitude-only, " << result.failures.size()
        << " failures";
    return out.str();
}

} // namespace

int main() {
    using polarcg::verify::VerifySuiteResult;

    // 1-3 + 6: pipeline equivalences and the radial selection theorem.
    {
        VerifySuiteResult result;
        double seconds = timed([&] { result = polarcg::verify::run_hypergeometric_check(8); });
        long flagged = 0;
        for (const auto& note : result.notes) {
            if (note.rfind("hypergeometric flagged keys: ", 0) == 0)
                flagged = std::stol(note.substr(note.rfind(' ') + 1));
        }
        report(1, "Eq 3.12 pipeline vs oracle, 2j <= 8",
               result.passed() && result.counts_consistent(), seconds,
               "flagged keys: " + std::to_string(flagged) + "; " + summary(result));

        seconds = timed([&] { result = polarcg::verify::run_gaunt_check(6); });
        report(2, "Gaunt theta-integral vs oracle, 2j <= 6",
               result.passed() && result.counts_consistent(), seconds, summary(result));

        seconds = timed([&] { result = polarcg::verify::run_laguerre_integral_check(); });
        report(3, "Eq 4.8 integral representation, l1, l2 <= 2",
               result.passed() && result.counts_consistent(), seconds, summary(result));

        seconds = timed([&] { result = polarcg::verify::run_radial_selection_check(6); });
        report(6, "radial selection theorem, 2j <= 6",
               result.passed() && result.counts_consistent(), seconds, summary(result));
    }

    // 4: symmetry suite.
    {
        VerifySuiteResult result;
        const double seconds = timed([&] { result = polarcg::verify::run_symmetry(8); });
        report(4, "symmetry orbits, 2j <= 8", result.passed() && result.counts_consistent(),
               seconds, summary(result));
    }

    // 5: generating functions.
    {
        VerifySuiteResult result;
        const double seconds = timed([&] { result = polarcg::verify::run_gf(4); });
        report(5, "generating functions (5.7, 5.11, 6.2)",
               result.passed() && result.counts_consistent(), seconds, summary(result));
    }

    // 7: orthogonality and unitarity.
    {
        VerifySuiteResult result;
        const double seconds = timed([&] { result = polarcg::verify::run_orthogonality(8); });
        report(7, "CG orthogonality (j <= 4) and recoupling unitarity (2j <= 3)",
               result.passed() && result.counts_consistent(), seconds, summary(result));
    }

    // 8: recoupling equivalence.
    {
        VerifySuiteResult result;
        const double seconds = timed([&] { result = polarcg::verify::run_recoupling(3); });
        long nontrivial = 0;
        for (const auto& note : result.notes) {
            if (note.rfind("nontrivial recoupling configurations: ", 0) == 0)
                nontrivial = std::stol(note.substr(note.rfind(' ') + 1));
        }
        report(8, "Eq 7.12 recoupling vs contraction oracle, 2j <= 3",
               result.passed() && nontrivial >= 20, seconds,
               "nontrivial: " + std::to_string(nontrivial) + "; " + summary(result));
    }

    // 9: reconciliation report must succeed regardless of discrepancies.
    {
        std::ostringstream out, err;
        int code = -1;
        const double seconds = timed([&] {
            code = polarcg::cli::run_command({"verify", "reconcile", "--max-2j", "6"}, out, err);
        });
        const bool has_rows = out.str().find("Eq 4.7") != std::string::npos &&
                              out.str().find("Eq 3.7 phase reading") != std::string::npos;
        report(9, "reconciliation report (verify reconcile)", code == 0 && has_rows, seconds,
               "exit code " + std::to_string(code));
    }

    // 10: table determinism across runs and worker counts.
    {
        bool passed = false;
        const double seconds = timed([&] {
            using polarcg::table::emit_table;
            using polarcg::table::Format;
            using polarcg::table::What;
            const std::string first = emit_table(6, What::cg, Format::csv, 1);
            const std::string second = emit_table(6, What::cg, Format::csv, 1);
            const std::string threaded = emit_table(6, What::cg, Format::csv, 4);
            const std::string json1 = emit_table(6, What::cg, Format::json, 1);
            const std::string json4 = emit_table(6, What::cg, Format::json, 4);
            passed = first == second && first == threaded && json1 == json4;
        });
        report(10, "table --max-2j 6 byte-identical across runs and workers", passed, seconds);
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << "\n";
    return failures == 0 ? 0 : 1;
}
