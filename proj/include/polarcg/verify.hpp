#ifndef POLARCG_VERIFY_HPP
#define POLARCG_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "polarcg/half_int.hpp"

namespace polarcg::verify {

struct Failure {
    std::string key;
    /// (pipeline name, canonical value text) pairs for the mismatching key.
    std::vector<std::pair<std::string, std::string>> values;
};

struct VerifySuiteResult {
    std::string suite;
    long cases = 0;
    long exact_matches = 0;
    long magnitude_only = 0;
    std::vector<Failure> failures;
    /// Flagged keys, observed sign patterns, reconciliation rows.
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
    bool counts_consistent() const {
        return cases == exact_matches + magnitude_only + static_cast<long>(failures.size());
    }
};

/// Hypergeometric, Gaunt and integral-representation pipelines against the
/// oracle, plus the radial selection theorem. Sweep bounds follow the
/// acceptance criteria: hypergeometric at max_2j, Gaunt at min(max_2j, 6),
/// the integral representation at l1, l2 <= 2, radial selection at
/// min(max_2j, 6).
VerifySuiteResult run_pipelines(int max_2j);

/// The individual pipeline checks composing run_pipelines (the acceptance
/// suite times and reports them separately).
VerifySuiteResult run_hypergeometric_check(int max_2j);
VerifySuiteResult run_gaunt_check(int max_2j);
VerifySuiteResult run_laguerre_integral_check();
VerifySuiteResult run_radial_selection_check(int max_2j);

/// CG matrix orthogonality (j1, j2 <= max_2j/2) and recoupling-matrix
/// unitarity (all 2j <= min(max_2j, 3)), in exact arithmetic.
VerifySuiteResult run_orthogonality(int max_2j);

/// Symmetry orbits: all four sign-flip images share one |3j|; the observed
/// sign pattern is logged in the notes.
VerifySuiteResult run_symmetry(int max_2j);

/// Generating functions: Eq 5.7 (Laguerre), Eq 5.11 (3j GF vs passage
/// elements, 2j <= min(max_2j, 4)), Eq 6.2 (integral vs closed form vs the
/// second-method pipeline, total degree 6).
VerifySuiteResult run_gf(int max_2j);

/// GF-extracted recoupling values against the CG-contraction oracle for all
/// configurations with 2j <= min(max_2j, 3); includes the oracle's
/// m-independence check.
VerifySuiteResult run_recoupling(int max_2j);

/// Structured discrepancy report for the paper's typo-suspect formulas
/// (Eq 4.7 as printed, both readings of Eq 3.7's phase, Eq 3.12 as printed,
/// Eq 6.2's printed right-hand side). Reporting only: never fails.
VerifySuiteResult run_reconcile(int max_2j);

VerifySuiteResult run_suite(const std::string& name, int max_2j);

std::string format_result(const VerifySuiteResult& result, bool verbose_failures = true);

} // namespace polarcg::verify

#endif
