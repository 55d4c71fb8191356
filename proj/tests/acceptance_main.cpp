// Acceptance battery: one pass/fail line per criterion. Exit 0 iff all
// criteria pass within their stated budgets.
//
//   1  e(A,A) = 1 exactly on the squarefree-type list, >= 2 off it,
//      plus the explicit affine witness in Hol(C4 x C4)
//   2  e(C_{p^n}, N) = 0 for the odd prime-power targets
//   3  e(A5, A5) = 2 (rho + lambda only); extended: e(SL(2,5), SL(2,5)) = 2
//   4  e(SL(2,5), N) = 0 for the order-120 spot targets
//   5  e(S5, S5) >= 1, e(S5, A5 x C2) >= 1, e(S5, C120) = 0
//   6  Byott consistency vs the brute holomorph oracle, all pairs <= 16
//   7  Greither-Pareigis end-to-end counts for |G| <= 6
//   8  property suites (parametrization, propagation, principal cocycles,
//      translation counts, reduction clauses, pruning, determinism)

#include <cstring>
#include <iostream>

#include "holocount/verify.hpp"

using namespace holocount;

namespace {

struct Criterion {
  int number;
  const char* suite;
  const char* summary;
};

const Criterion kCriteria[] = {
    {1, "abelian", "abelian self-pair battery with the C4xC4 witness"},
    {2, "cyclic-pn", "cyclic odd prime-power non-existence battery"},
    {3, "quasisimple", "quasisimple self-pairs A5 and SL(2,5)"},
    {4, "2a5", "SL(2,5) against non-isomorphic order-120 types"},
    {5, "s5", "S5 spot checks"},
    {6, "oracle-byott", "Byott consistency + brute oracle, pairs <= 16"},
    {7, "oracle-gp", "Greither-Pareigis end-to-end, |G| <= 6"},
    {8, "props", "property suites"},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--verbose") == 0)
      verbose = true;
  }

  Session session;
  VerifyOptions opt;
  opt.workers = 2;
  opt.extended = true;
  if (verbose) opt.log = &std::cerr;

  bool allPass = true;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    SuiteResult res = run_suite(session, c.suite, opt);
    bool pass = res.pass();
    allPass = allPass && pass;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number
              << ": " << c.summary << " (" << res.checks.size()
              << " checks, " << res.elapsedSec << " s";
    if (res.budgetSec > 0) std::cout << ", budget " << res.budgetSec << " s";
    std::cout << ")\n";
    if (!pass) {
      for (const auto& line : res.checks)
        if (!line.pass)
          std::cout << "       failed: " << line.name
                    << (line.detail.empty() ? "" : "  -- " + line.detail)
                    << "\n";
      if (res.budgetSec > 0 && res.elapsedSec > res.budgetSec)
        std::cout << "       over budget\n";
    }
    std::cout.flush();
  }
  return allPass ? 0 : 1;
}
