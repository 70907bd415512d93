#include "qzeta/report.hpp"

#include <sstream>

#include <json.hpp>

namespace qzeta {

using nlohmann::json;

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::NotAttempted: return "NOT_ATTEMPTED";
  }
  throw std::logic_error("unreachable claim status");
}

ClaimStatus claim_status_from_string(const std::string& s) {
  if (s == "PASS") return ClaimStatus::Pass;
  if (s == "FAIL") return ClaimStatus::Fail;
  if (s == "NOT_ATTEMPTED") return ClaimStatus::NotAttempted;
  throw std::invalid_argument("unknown claim status: " + s);
}

int VerificationReport::count(ClaimStatus s) const {
  int c = 0;
  for (const auto& claim : claims)
    if (claim.status == s) ++c;
  return c;
}

std::string VerificationReport::to_json() const {
  json j;
  j["run_config"] = {{"p", config.ps},
                     {"n_max", config.n_max},
                     {"abc_bound", config.abc_bound},
                     {"depth", config.depth},
                     {"suite", config.suite}};
  j["claims"] = json::array();
  for (const auto& c : claims) {
    json jc;
    jc["id"] = c.id;
    jc["params"] = c.params;
    jc["status"] = to_string(c.status);
    jc["witness"] = c.witness;
    j["claims"].push_back(std::move(jc));
  }
  j["notes"] = notes;
  j["summary"] = {{"pass", count(ClaimStatus::Pass)},
                  {"fail", count(ClaimStatus::Fail)},
                  {"not_attempted", count(ClaimStatus::NotAttempted)}};
  return j.dump(2);
}

VerificationReport VerificationReport::from_json(const std::string& text) {
  json j = json::parse(text);
  VerificationReport report;
  const auto& cfg = j.at("run_config");
  report.config.ps = cfg.at("p").get<std::vector<long>>();
  report.config.n_max = cfg.at("n_max").get<int>();
  report.config.abc_bound = cfg.at("abc_bound").get<long>();
  report.config.depth = cfg.at("depth").get<long>();
  report.config.suite = cfg.at("suite").get<std::string>();
  for (const auto& jc : j.at("claims")) {
    Claim c;
    c.id = jc.at("id").get<std::string>();
    c.params = jc.at("params").get<std::map<std::string, std::string>>();
    c.status = claim_status_from_string(jc.at("status").get<std::string>());
    c.witness = jc.at("witness").get<std::string>();
    report.claims.push_back(std::move(c));
  }
  report.notes = j.at("notes").get<std::vector<std::string>>();
  return report;
}

namespace {

constexpr int kEndpointDigits = 24;
constexpr int kExponentDigits = 12;

std::string lo_str(const RationalInterval& iv) {
  return to_decimal_string(iv.lo, kEndpointDigits, Rounding::Down);
}
std::string hi_str(const RationalInterval& iv) {
  return to_decimal_string(iv.hi, kEndpointDigits, Rounding::Up);
}
std::string mid_str(const RationalInterval& iv) {
  return to_decimal_string(iv.midpoint(), kExponentDigits, Rounding::Nearest);
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "p,n,beta,alpha,b,a,res1_lo,res1_hi,res2_lo,res2_hi,exp1,exp2\n";
  for (const auto& r : rows) {
    out << r.p << ',' << r.n << ',' << r.beta.get_str() << ',' << r.alpha.get_str()
        << ',' << r.b.get_str() << ',' << r.a.get_str() << ',' << lo_str(r.res1) << ','
        << hi_str(r.res1) << ',' << lo_str(r.res2) << ',' << hi_str(r.res2) << ','
        << mid_str(r.exp1) << ',' << mid_str(r.exp2) << '\n';
  }
  return out.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  json j = json::array();
  for (const auto& r : rows) {
    json jr;
    jr["p"] = r.p;
    jr["n"] = r.n;
    jr["beta"] = r.beta.get_str();
    jr["alpha"] = r.alpha.get_str();
    jr["b"] = r.b.get_str();
    jr["a"] = r.a.get_str();
    jr["res1"] = {{"lo", lo_str(r.res1)}, {"hi", hi_str(r.res1)}};
    jr["res2"] = {{"lo", lo_str(r.res2)}, {"hi", hi_str(r.res2)}};
    jr["exp1"] = {{"lo", lo_str(r.exp1)}, {"hi", hi_str(r.exp1)}};
    jr["exp2"] = {{"lo", lo_str(r.exp2)}, {"hi", hi_str(r.exp2)}};
    j.push_back(std::move(jr));
  }
  return j.dump(2);
}

std::string sweep_text(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "p=" << r.p << " n=" << r.n << "\n"
        << "  beta  = " << r.beta.get_str() << "\n"
        << "  alpha = " << r.alpha.get_str() << "\n"
        << "  b     = " << r.b.get_str() << "\n"
        << "  a     = " << r.a.get_str() << "\n"
        << "  beta*zeta_q(1)-alpha = " << to_string_midrad(r.res1, 16) << "\n"
        << "  b*zeta_q(2)-a        = " << to_string_midrad(r.res2, 16) << "\n"
        << "  log_p|res1|/n^2      = " << to_string_midrad(r.exp1, 10) << "\n"
        << "  log_p|res2|/n^2      = " << to_string_midrad(r.exp2, 10) << "\n";
  }
  return out.str();
}

}  // namespace qzeta
