#ifndef HOLOCOUNT_SESSION_HPP_
#define HOLOCOUNT_SESSION_HPP_

#include <map>
#include <mutex>

#include "holocount/catalog.hpp"
#include "holocount/count.hpp"

namespace holocount {

// Memoizing facade over build_group / count_reg for a process lifetime:
// groups are shared by spec string, reports by (g, n, prune, workers).
// Extra table files can be registered and then referenced by their spec.
class Session {
 public:
  std::shared_ptr<const Group> group(const std::string& spec);
  void registerTableFile(const std::string& path);
  const std::vector<std::string>& extraSpecs() const { return extras_; }

  RegReport& report(const std::string& gSpec, const std::string& nSpec,
                    const CountOptions& opt);

  int maxOrder = Limits::kDefaultDenseGroup;

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const Group>> groups_;
  std::map<std::tuple<std::string, std::string, bool, int, bool>, RegReport>
      reports_;
  std::vector<std::string> extras_;
};

}  // namespace holocount

#endif  // HOLOCOUNT_SESSION_HPP_
