#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsymkit/io.hpp"

namespace qsym::verify {

// pass/fail are ordinary outcomes. `erratum` marks a published formula that was
// checked as printed, found wrong, and replaced by a corrected check alongside.
// `report` carries findings about conjectures; neither counts as a failure.
enum class Status { Pass, Fail, Erratum, Report };
const char* status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  io::Json witness;  // null unless the check failed or reports something
};

struct Options {
  std::optional<int> n;  // overrides the suite's default size bound
  int threads = 1;
};

// unimodal, cons, bases, kp, kpe, families, counterexamples
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// "all" runs every suite. Results come back in a fixed order whatever the
// thread count. Throws InvalidArgument for an unknown suite.
std::vector<Check> run_suite(const std::string& name, const Options& opt);

bool all_passed(const std::vector<Check>& checks);  // no Fail

// Runs `jobs` on up to `threads` workers; results keep the job order.
std::vector<Check> run_parallel(const std::vector<std::function<Check()>>& jobs, int threads);

}  // namespace qsym::verify
