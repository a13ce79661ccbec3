#ifndef KAL_VERIFY_HPP_
#define KAL_VERIFY_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace kal {

struct CheckResult {
  int criterion = 0;  // 1..9, matching the reproduction table
  std::string name;
  std::string provenance;  // "paper" or "derived"
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool overall() const;
  bool criterion_pass(int criterion) const;
};

// Loads the expected-values table; empty path uses the bundled data file.
nlohmann::json load_expected(std::string const& path = {});

// Runs the full reproduction suite against the expected-values table.
// Deterministic: fixed seeds, fixed check order. Size-limit or internal
// errors become failed checks, never exceptions.
VerifyReport verify_paper(nlohmann::json const& expected);

void print_report(std::ostream& out, VerifyReport const& report);
nlohmann::json report_to_json(VerifyReport const& report);

}  // namespace kal

#endif  // KAL_VERIFY_HPP_
