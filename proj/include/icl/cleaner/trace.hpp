#pragma once

#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace icl {

// Structured event log of a cleaning run. Safe to append from several threads.
class Trace {
 public:
  using json = nlohmann::json;

  void emit(std::string event, int depth, std::string rule, std::string branch, json payload = json::object()) {
    json e{{"event", std::move(event)},
           {"depth", depth},
           {"rule", std::move(rule)},
           {"branch", std::move(branch)},
           {"payload", std::move(payload)}};
    std::lock_guard<std::mutex> lock(mu_);
    events_.push_back(std::move(e));
  }

  std::vector<json> events() const {
    std::lock_guard<std::mutex> lock(mu_);
    return events_;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return events_.size();
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    events_.clear();
  }

  void write_jsonl(std::ostream& os) const {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& e : events_) os << e.dump() << '\n';
  }

 private:
  mutable std::mutex mu_;
  std::vector<json> events_;
};

// Where a run reports to; a null trace disables recording.
struct TraceContext {
  Trace* trace = nullptr;
  int depth = 0;
  std::string branch;

  bool on() const { return trace != nullptr; }

  void emit(const std::string& event, const std::string& rule, Trace::json payload = Trace::json::object()) const {
    if (trace) trace->emit(event, depth, rule, branch, std::move(payload));
  }

  TraceContext child(const std::string& step) const {
    TraceContext c = *this;
    if (trace) c.branch = branch.empty() ? step : branch + "/" + step;
    return c;
  }

  TraceContext deeper() const {
    TraceContext c = *this;
    ++c.depth;
    return c;
  }
};

}  // namespace icl
