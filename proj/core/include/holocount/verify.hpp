#ifndef HOLOCOUNT_VERIFY_HPP_
#define HOLOCOUNT_VERIFY_HPP_

#include <iosfwd>

#include "holocount/oracle.hpp"
#include "holocount/session.hpp"

namespace holocount {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckLine> checks;
  double elapsedSec = 0;
  double budgetSec = 0;  // stated budget; 0 = none
  bool pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return budgetSec <= 0 || elapsedSec <= budgetSec;
  }
};

struct VerifyOptions {
  int workers = 2;
  bool extended = true;   // include the slow-profile checks
  std::ostream* log = nullptr;  // live one-line-per-check output
};

// Suites: abelian | cyclic-pn | quasisimple | 2a5 | s5 | oracle | props.
SuiteResult run_suite(Session& session, const std::string& name,
                      const VerifyOptions& opt);
std::vector<std::string> suite_names();

void print_suite(std::ostream& os, const SuiteResult& r);

}  // namespace holocount

#endif  // HOLOCOUNT_VERIFY_HPP_
