// holocount: count Hopf-Galois structures e(G,N) by enumerating bijective
// crossed homomorphisms G -> N, i.e. regular subgroups of Hol(N).
//
// Exit codes: 0 success, 1 bad input or failed verification,
// 2 budget exhausted (report flagged non-authoritative).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "holocount/verify.hpp"

using namespace holocount;

namespace {

struct CommonFlags {
  bool prune = true;
  double budget = 300.0;
  int workers = 2;
  std::string format = "json";
  int64_t witnesses = 10000;
  bool emitWitnesses = false;
  std::vector<std::string> tables;
  std::string output;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--prune,!--no-prune", f.prune,
                "quotient-level branch pruning (default on)");
  cmd->add_option("--budget", f.budget,
                  "time budget per (G,N) pair in seconds, 0 = unlimited");
  cmd->add_option("--workers", f.workers, "worker thread count");
  cmd->add_option("--format", f.format, "output format: json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--witnesses", f.witnesses,
                  "witness retention cap (counts stay exact)");
  cmd->add_flag("--emit-witnesses", f.emitWitnesses,
                "include retained witnesses in JSON output");
  cmd->add_option("--table", f.tables,
                  "load an extra group from a table file (repeatable)");
  cmd->add_option("--output", f.output, "write the report to a file");
}

CountOptions to_count_options(const CommonFlags& f) {
  CountOptions o;
  o.prune = f.prune;
  o.budgetSec = f.budget;
  o.workers = std::max(1, f.workers);
  o.witnessCap = f.witnesses;
  return o;
}

std::ostream& open_out(const CommonFlags& f, std::ofstream& file) {
  if (f.output.empty()) return std::cout;
  file.open(f.output);
  if (!file) fail("cannot open output file: " + f.output);
  return file;
}

void emit_report(std::ostream& os, const RegReport& r, const CommonFlags& f,
                 bool withHeader) {
  if (f.format == "json")
    os << report_to_json(r, f.emitWitnesses) << "\n";
  else if (f.format == "csv") {
    if (withHeader) os << report_csv_header() << "\n";
    os << report_to_csv_row(r) << "\n";
  } else
    os << report_to_text(r);
}

int cmd_compute(Session& session, const std::string& gSpec,
                const std::string& nSpec, const CommonFlags& flags) {
  for (const auto& t : flags.tables) session.registerTableFile(t);
  auto g = session.group(gSpec);
  auto n = session.group(nSpec);
  require(g->order() == n->order(),
          "order mismatch: |" + gSpec + "| = " + std::to_string(g->order()) +
              " but |" + nSpec + "| = " + std::to_string(n->order()));
  RegReport r = count_reg(g, n, to_count_options(flags));
  std::ofstream file;
  emit_report(open_out(flags, file), r, flags, true);
  return r.authoritative ? 0 : 2;
}

int cmd_sweep(Session& session, int order, const CommonFlags& flags) {
  for (const auto& t : flags.tables) session.registerTableFile(t);
  std::vector<std::string> specs;
  for (const auto& e : catalog_specs(order)) specs.push_back(e.spec);
  for (const auto& e : session.extraSpecs())
    if (session.group(e)->order() == order) specs.push_back(e);

  std::ofstream file;
  std::ostream& os = open_out(flags, file);
  bool allAuthoritative = true;
  bool first = true;
  if (flags.format == "json") os << "[\n";
  for (const auto& gs : specs) {
    for (const auto& ns : specs) {
      RegReport r = count_reg(session.group(gs), session.group(ns),
                              to_count_options(flags));
      allAuthoritative = allAuthoritative && r.authoritative;
      if (flags.format == "json") {
        if (!first) os << ",\n";
        os << report_to_json(r, flags.emitWitnesses);
      } else {
        emit_report(os, r, flags, first);
      }
      first = false;
    }
  }
  if (flags.format == "json") os << "\n]\n";
  return allAuthoritative ? 0 : 2;
}

int cmd_verify(Session& session, const std::string& suite,
               const CommonFlags& flags, bool quick) {
  VerifyOptions opt;
  opt.workers = std::max(1, flags.workers);
  opt.extended = !quick;
  opt.log = &std::cout;
  SuiteResult res = run_suite(session, suite, opt);
  std::cout << "suite " << res.suite << ": "
            << (res.pass() ? "PASS" : "FAIL") << " (" << res.elapsedSec
            << " s)\n";
  return res.pass() ? 0 : 1;
}

int cmd_catalog(Session& session, int order, const CommonFlags& flags) {
  for (const auto& t : flags.tables) session.registerTableFile(t);
  auto show = [&](int o) {
    auto specs = catalog_specs(o);
    std::cout << "order " << o << " (complete: "
              << (catalog_complete(o) ? "true" : "false") << "):\n";
    for (const auto& e : specs) std::cout << "  " << e.spec << "\n";
    for (const auto& e : session.extraSpecs())
      if (session.group(e)->order() == o) std::cout << "  " << e << "\n";
  };
  if (order > 0) {
    show(order);
  } else {
    for (int o = 1; o <= 16; ++o) show(o);
    show(27);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "holocount: Hopf-Galois structure counts e(G,N) via regular subgroups "
      "of the holomorph"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string gSpec, nSpec, suite;
  int order = 0;

  auto* compute = app.add_subcommand(
      "compute", "count e(G,N) for one pair of group specs");
  compute->add_option("g", gSpec, "Galois group spec")->required();
  compute->add_option("n", nSpec, "type spec (same order)")->required();
  add_common(compute, flags);

  auto* sweep = app.add_subcommand(
      "sweep", "count e(G,N) over all catalog pairs of one order");
  sweep->add_option("order", order, "group order")->required();
  add_common(sweep, flags);

  bool quick = false;
  auto* verify = app.add_subcommand("verify", "run a named check suite");
  verify->add_option("suite", suite, "abelian|cyclic-pn|quasisimple|2a5|s5|"
                                     "oracle|props")
      ->required();
  verify->add_flag("--quick", quick, "skip the extended (slow) profile");
  add_common(verify, flags);

  auto* catalog = app.add_subcommand(
      "catalog", "list available group specs and completeness flags");
  catalog->add_option("order", order, "restrict to one order");
  add_common(catalog, flags);

  CLI11_PARSE(app, argc, argv);

  Session session;
  try {
    if (compute->parsed()) return cmd_compute(session, gSpec, nSpec, flags);
    if (sweep->parsed()) return cmd_sweep(session, order, flags);
    if (verify->parsed()) return cmd_verify(session, suite, flags, quick);
    if (catalog->parsed()) return cmd_catalog(session, order, flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
