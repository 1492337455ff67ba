#include "brlab/report.hpp"

namespace brlab {

bool Report::pass() const {
  for (const auto& r : records_)
    if (!r.pass) return false;
  return true;
}

std::vector<const CheckRecord*> Report::failures() const {
  std::vector<const CheckRecord*> out;
  for (const auto& r : records_)
    if (!r.pass) out.push_back(&r);
  return out;
}

nlohmann::json Report::to_json(bool with_timings) const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["status"] = pass() ? "pass" : "fail";
  j["checks"] = nlohmann::json::array();
  for (const auto& r : records_) {
    nlohmann::json jr{{"name", r.name}, {"params", r.params}, {"status", r.pass ? "pass" : "fail"}, {"details", r.details}};
    if (with_timings) jr["seconds"] = r.seconds;
    j["checks"].push_back(std::move(jr));
  }
  return j;
}

}  // namespace brlab
