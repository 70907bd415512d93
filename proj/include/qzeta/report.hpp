#pragma once

#include <map>
#include <string>
#include <vector>

#include "qzeta/interval.hpp"

namespace qzeta {

enum class ClaimStatus { Pass, Fail, NotAttempted };

std::string to_string(ClaimStatus s);
ClaimStatus claim_status_from_string(const std::string& s);

struct Claim {
  std::string id;
  std::map<std::string, std::string> params;
  ClaimStatus status = ClaimStatus::NotAttempted;
  std::string witness;

  bool operator==(const Claim&) const = default;
};

struct RunConfig {
  std::vector<long> ps{2};
  int n_max = 8;
  long abc_bound = 3;
  long depth = 0;  // 0 = automatic, grows with n
  std::string suite = "all";

  bool operator==(const RunConfig&) const = default;
};

// Aggregated pass/fail ledger. A zero exit status requires fail_count() == 0;
// serialization round-trips exactly (all values are strings or integers).
struct VerificationReport {
  RunConfig config;
  std::vector<Claim> claims;
  std::vector<std::string> notes;

  int count(ClaimStatus s) const;
  int fail_count() const { return count(ClaimStatus::Fail); }
  bool ok() const { return fail_count() == 0; }

  std::string to_json() const;
  static VerificationReport from_json(const std::string& text);

  bool operator==(const VerificationReport&) const = default;
};

// One sweep line per n: the integer approximants plus residual enclosures and
// decay-exponent enclosures.
struct SweepRow {
  long p = 2;
  int n = 1;
  BigInt beta, alpha, b, a;
  RationalInterval res1, res2;
  RationalInterval exp1, exp2;
};

// Header + rows, RFC-4180 style: comma separated, decimal points, no locale.
// Columns: p,n,beta,alpha,b,a,res1_lo,res1_hi,res2_lo,res2_hi,exp1,exp2
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);
std::string sweep_text(const std::vector<SweepRow>& rows);

}  // namespace qzeta
