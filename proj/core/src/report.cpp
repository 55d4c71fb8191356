#include <sstream>

#include "holocount/count.hpp"
#include "json.hpp"

namespace holocount {

using ordered_json = nlohmann::ordered_json;

std::string report_to_json(const RegReport& r, bool withWitnesses) {
  ordered_json j;
  j["schema"] = 1;
  j["g"] = r.g;
  j["n"] = r.n;
  j["reg_count"] = r.regCount;
  j["e"] = r.eValue;
  j["subgroups"] = r.subgroupCount;
  j["classification"] = ordered_json{{"rho", r.rhoCount},
                                     {"lambda", r.lambdaCount},
                                     {"other", r.otherCount}};
  j["elapsed_ms"] = r.elapsedMs;
  j["pruned_branches"] = r.prunedBranches;
  j["authoritative"] = r.authoritative;
  if (withWitnesses) {
    ordered_json ws = ordered_json::array();
    for (const auto& w : r.witnesses) {
      ws.push_back(ordered_json{{"f", w.fImage},
                                {"g", w.gImage},
                                {"hom_count", w.homCount}});
    }
    j["witnesses"] = std::move(ws);
    j["witnesses_dropped"] = r.witnessesDropped;
  }
  return j.dump(2);
}

std::string report_csv_header() {
  return "schema,g,n,reg_count,e,subgroups,rho,lambda,other,elapsed_ms,"
         "pruned_branches,authoritative";
}

std::string report_to_csv_row(const RegReport& r) {
  std::ostringstream os;
  os << 1 << ',' << r.g << ',' << r.n << ',' << r.regCount << ','
     << r.eValue << ',' << r.subgroupCount << ',' << r.rhoCount << ','
     << r.lambdaCount << ',' << r.otherCount << ',' << r.elapsedMs << ','
     << r.prunedBranches << ',' << (r.authoritative ? "true" : "false");
  return os.str();
}

std::string report_to_text(const RegReport& r) {
  std::ostringstream os;
  os << "e(" << r.g << ", " << r.n << ") = " << r.eValue << "\n"
     << "  |Reg| = " << r.regCount << "  subgroups = " << r.subgroupCount
     << "  classification: rho=" << r.rhoCount
     << " lambda=" << r.lambdaCount << " other=" << r.otherCount << "\n"
     << "  |Aut(G)| = " << r.autG << "  |Aut(N)| = " << r.autN
     << "  pruned = " << r.prunedBranches << "  elapsed = " << r.elapsedMs
     << " ms" << (r.authoritative ? "" : "  [NON-AUTHORITATIVE]") << "\n";
  return os.str();
}

}  // namespace holocount
