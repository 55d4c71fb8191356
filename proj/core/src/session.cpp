#include "holocount/session.hpp"

namespace holocount {

std::shared_ptr<const Group> Session::group(const std::string& spec) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = groups_.find(spec);
  if (it == groups_.end()) {
    it = groups_
             .emplace(spec, std::make_shared<const Group>(
                                build_group(spec, maxOrder)))
             .first;
  }
  return it->second;
}

void Session::registerTableFile(const std::string& path) {
  std::string spec = "file:" + path;
  std::lock_guard<std::mutex> lock(mu_);
  if (groups_.count(spec)) return;
  groups_.emplace(spec,
                  std::make_shared<const Group>(load_table_file(path)));
  extras_.push_back(spec);
}

RegReport& Session::report(const std::string& gSpec, const std::string& nSpec,
                           const CountOptions& opt) {
  auto key = std::make_tuple(gSpec, nSpec, opt.prune, opt.workers,
                             opt.assertLemma41);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = reports_.find(key);
    if (it != reports_.end() && it->second.authoritative) return it->second;
  }
  auto g = group(gSpec);
  auto n = group(nSpec);
  RegReport rep = count_reg(g, n, opt);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = reports_.insert_or_assign(key, std::move(rep));
  return it->second;
}

}  // namespace holocount
