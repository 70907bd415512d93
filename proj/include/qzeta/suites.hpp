#pragma once

#include "qzeta/independence.hpp"
#include "qzeta/report.hpp"

namespace qzeta {

// Suite drivers behind the CLI `verify` command and the acceptance tests.
// Each emits one claim per (claim id, parameter tuple); failures never throw
// out of a suite, they are recorded as FAIL claims.

// Exact orthogonality for all 0 <= m <= n <= n_max.
std::vector<Claim> suite_orthogonality(const std::vector<long>& ps, int n_max);

// Coefficientwise equality of the three construction routes, plus the
// leading-coefficient closed forms against the built polynomial.
std::vector<Claim> suite_representations(const std::vector<long>& ps, int n_max);

// Integrality, residual bounds, nonvanishing, and root localization per n.
std::vector<Claim> suite_bounds(const std::vector<long>& ps, int n_max, long depth);

// The exact log-weight integral identity for all m <= n-1, n <= n_max.
std::vector<Claim> suite_extralemma(const std::vector<long>& ps, int n_max);

// q-binomial congruence, step-1 congruence, step-3 non-divisibility, the
// full (a,b,c) grid of nonzero certificates, and the prime-divisor property
// of cyclotomic values.
std::vector<Claim> suite_congruence(const std::vector<long>& ps, int n_max, long abc_bound);

// Runs the named suite ("orthogonality", "representations", "bounds",
// "extralemma", "congruence" or "all") and assembles the report.
VerificationReport run_verify(const RunConfig& config);

// One row per n = 1..n_max: integers, residual enclosures, decay exponents.
// depth = 0 selects the automatic per-n depth.
std::vector<SweepRow> run_sweep(long p, int n_max, long depth);

}  // namespace qzeta
