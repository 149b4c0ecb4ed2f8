#ifndef GARSIDE_VERIFY_HPP
#define GARSIDE_VERIFY_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace garside {

// One sub-result inside an acceptance criterion.
struct SubResult {
  std::string label;
  bool pass;
  bool informational;  // printed, never counted
};

class SubChecks {
 public:
  void check(const std::string& label, bool ok) { results_.push_back({label, ok, false}); }
  void note(const std::string& label) { results_.push_back({label, true, true}); }
  bool all_pass() const;
  const std::vector<SubResult>& results() const { return results_; }

 private:
  std::vector<SubResult> results_;
};

struct AcceptanceCheck {
  int criterion;                     // 1..12
  std::vector<std::string> modules;  // scope tags for the verify command
  std::string label;
  double time_limit_seconds;  // 0 = unlimited
  bool experimental;          // outcome is reported, not asserted
  std::function<SubChecks()> run;
};

const std::vector<AcceptanceCheck>& acceptance_checks();

// Runs every check whose module tags match scope ("all" or a module
// name), printing one line per criterion plus its sub-results. Returns
// the number of failed non-experimental checks.
int run_acceptance(std::ostream& out, const std::string& scope);

}  // namespace garside

#endif  // GARSIDE_VERIFY_HPP
