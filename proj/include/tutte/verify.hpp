#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tutte {

struct CheckResult {
  std::string suite;
  std::string name;
  long trials = 0;
  bool ok = true;
  std::string detail;  // first counterexample when !ok
};

/// graph-core, tutte-engine, gadget-algebra, reduction-compiler, classifier-cli.
const std::vector<std::string>& verify_suites();

/// Replays the invariant checks of one suite ("all" runs every suite) with fixed seeds.
/// on_result is called as each check finishes.
std::vector<CheckResult> run_verify(const std::string& suite,
                                    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace tutte
