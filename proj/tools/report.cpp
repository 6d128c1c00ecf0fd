#include "report.hpp"

#include <algorithm>
#include <iomanip>

namespace qsym::cli {

namespace {

Json check_json(const verify::Check& c) {
  Json j{{"name", c.name}, {"status", verify::status_name(c.status)}, {"detail", c.detail}};
  if (!c.witness.is_null()) j["witness"] = c.witness;
  return j;
}

}  // namespace

Json to_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  j["inputs_digest"] = r.inputs_digest;
  j["view"] = r.view == View::Plain ? "plain" : "z";
  Json outs = Json::array();
  for (const Output& o : r.outputs) {
    Json e{{"name", o.name}, {"element", io::to_json(o.element)}, {"text", io::to_text(o.element, r.view)}};
    if (o.certificates) e["certificates"] = io::to_json(*o.certificates);
    if (!o.extra.is_null()) e["extra"] = o.extra;
    outs.push_back(std::move(e));
  }
  j["outputs"] = std::move(outs);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  j["checks"] = std::move(checks);
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.wall_seconds) j["wall_seconds"] = *r.wall_seconds;
  return j;
}

void print(const RunReport& r, std::ostream& out) {
  for (const Output& o : r.outputs) {
    out << o.name << ": " << io::to_text(o.element, r.view) << '\n';
    if (o.certificates && !o.certificates->empty()) {
      std::size_t width = 5;
      for (const auto& [a, c] : *o.certificates) width = std::max(width, a.to_string().size());
      out << "  " << std::left << std::setw(static_cast<int>(width)) << "alpha" << "  z_alpha * [Psi_alpha]\n";
      for (const auto& [a, c] : *o.certificates)
        out << "  " << std::setw(static_cast<int>(width)) << a.to_string() << "  " << c.to_string() << '\n';
      out << std::right;
    }
  }
  for (const auto& n : r.notes) out << "note: " << n << '\n';
  if (!r.checks.empty()) {
    std::size_t width = 4;
    for (const auto& c : r.checks) width = std::max(width, c.name.size());
    for (const auto& c : r.checks) {
      out << std::left << std::setw(8) << verify::status_name(c.status) << std::setw(static_cast<int>(width)) << c.name
          << "  " << c.detail << '\n';
      if (c.status != verify::Status::Pass && !c.witness.is_null()) out << "        witness: " << c.witness.dump() << '\n';
    }
    out << std::right;
    const auto fails = std::count_if(r.checks.begin(), r.checks.end(),
                                     [](const verify::Check& c) { return c.status == verify::Status::Fail; });
    out << r.checks.size() << " checks, " << fails << " failed\n";
  }
  if (r.wall_seconds) out << "wall time: " << *r.wall_seconds << " s\n";
}

bool failed(const RunReport& r) { return !verify::all_passed(r.checks); }

}  // namespace qsym::cli
