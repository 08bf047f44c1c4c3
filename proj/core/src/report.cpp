#include "coeq/report.hpp"

namespace coeq {

const char* verdict_name(CertReport::Verdict v) {
  switch (v) {
    case CertReport::Verdict::Pass: return "pass";
    case CertReport::Verdict::Fail: return "fail";
    case CertReport::Verdict::Skipped: return "skipped";
  }
  return "?";
}

CertReport make_pass(std::string name, std::string statement, long long bound,
                     std::string details, std::string witness) {
  return CertReport{std::move(name), std::move(statement), bound,
                    CertReport::Verdict::Pass, std::move(witness),
                    std::move(details)};
}

CertReport make_fail(std::string name, std::string statement, long long bound,
                     std::string witness, std::string details) {
  return CertReport{std::move(name), std::move(statement), bound,
                    CertReport::Verdict::Fail, std::move(witness),
                    std::move(details)};
}

}  // namespace coeq
