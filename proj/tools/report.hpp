#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qsymkit/io.hpp"
#include "qsymkit/verify.hpp"

namespace qsym::cli {

using io::Json;

struct Output {
  std::string name;
  io::AnyElement element;
  std::optional<pp::Certificates> certificates;
  Json extra;  // anything else worth keeping, null when unused
};

struct RunReport {
  std::string command;
  std::string inputs_digest;
  View view = View::ZNormalized;
  std::vector<Output> outputs;
  std::vector<verify::Check> checks;
  std::vector<std::string> notes;
  std::optional<double> wall_seconds;  // only with --timing
};

Json to_json(const RunReport& r);
void print(const RunReport& r, std::ostream& out);
bool failed(const RunReport& r);

}  // namespace qsym::cli
