// Invariant suite behind the `verify` command.
#ifndef DIII_VERIFY_HPP
#define DIII_VERIFY_HPP

#include <string>
#include <vector>

namespace diii {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // first failure, or a short summary
};

/// Runs every structural check for sizes 1..n and returns one row per
/// check, in a fixed order.
std::vector<CheckResult> run_verification(int n);

}  // namespace diii

#endif  // DIII_VERIFY_HPP
