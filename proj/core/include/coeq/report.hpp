#pragma once

#include <string>
#include <vector>

namespace coeq {

// Result of one bounded certification check.  "pass" means: verified exactly
// for every instance within the stated bound (never a claim beyond it);
// "skipped" means the hypothesis of the statement was not met, so no claim is
// made.  Witness carries a counterexample (on fail) or a constructive
// certificate (on pass, where one exists) in printable form.
struct CertReport {
  enum class Verdict { Pass, Fail, Skipped };

  std::string name;       // stable machine-readable identifier
  std::string statement;  // the identity or property checked, in plain terms
  long long bound = 0;    // size/depth/period bound the check ran to
  Verdict verdict = Verdict::Pass;
  std::string witness;  // counterexample or certificate, empty if none
  std::string details;  // instance counts etc.

  bool passed() const { return verdict == Verdict::Pass; }
};

const char* verdict_name(CertReport::Verdict v);

// Convenience used by the check implementations.
CertReport make_pass(std::string name, std::string statement, long long bound,
                     std::string details = "", std::string witness = "");
CertReport make_fail(std::string name, std::string statement, long long bound,
                     std::string witness, std::string details = "");

}  // namespace coeq
