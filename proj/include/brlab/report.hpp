#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace brlab {

struct CheckRecord {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0.0;
};

class Report {
 public:
  static constexpr const char* kSchemaVersion = "1";

  void add(CheckRecord rec) { records_.push_back(std::move(rec)); }
  void merge(const Report& o) { records_.insert(records_.end(), o.records_.begin(), o.records_.end()); }

  bool pass() const;
  const std::vector<CheckRecord>& records() const { return records_; }
  std::vector<const CheckRecord*> failures() const;

  // Timings are omitted unless requested so reports stay bit-identical across runs.
  nlohmann::json to_json(bool with_timings = false) const;

 private:
  std::vector<CheckRecord> records_;
};

// Runs `body` (which fills details and returns pass) and records its wall time.
template <class F>
CheckRecord timed_check(std::string name, nlohmann::json params, F&& body);

}  // namespace brlab

#include <chrono>

namespace brlab {

template <class F>
CheckRecord timed_check(std::string name, nlohmann::json params, F&& body) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.params = std::move(params);
  const auto t0 = std::chrono::steady_clock::now();
  rec.pass = body(rec.details);
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace brlab
