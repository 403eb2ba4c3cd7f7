#include "semihall/report.hpp"

#include <algorithm>
#include <sstream>

namespace semihall {

void SuiteReport::merge(const SuiteReport& o) {
  instances += o.instances;
  failed += o.failed;
  aborted += o.aborted;
  for (const auto& f : o.failures) {
    if (failures.size() >= kMaxRecordedFailures) break;
    failures.push_back(f);
  }
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : failures) fs.push_back({{"instance", f.instance}, {"detail", f.detail}});
  return {{"name", name}, {"instances", instances}, {"failed", failed}, {"aborted", aborted}, {"failures", fs}};
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << name << ": " << instances << " instances, " << failed << " failed, " << aborted << " aborted";
  if (!failures.empty()) os << "; first: " << failures.front().instance << " (" << failures.front().detail << ")";
  return os.str();
}

SuiteReport run_suite(const std::string& name, std::size_t n, unsigned jobs,
                      const std::function<Check(std::size_t)>& check) {
  enum class Kind { ok, fail, abort };
  struct Slot {
    Kind kind = Kind::ok;
    Failure failure;
  };
  std::vector<Slot> slots(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> errored{false};

  auto worker = [&] {
    while (!errored.load()) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        if (auto f = check(i)) slots[i] = {Kind::fail, std::move(*f)};
      } catch (const TruncationError& e) {
        slots[i] = {Kind::abort, {"#" + std::to_string(i), e.what()}};
      } catch (...) {
        if (!errored.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  SuiteReport r;
  r.name = name;
  r.instances = n;
  for (auto& s : slots) {
    if (s.kind == Kind::ok) continue;
    if (s.kind == Kind::fail) ++r.failed;
    if (s.kind == Kind::abort) ++r.aborted;
    if (r.failures.size() < kMaxRecordedFailures) r.failures.push_back(std::move(s.failure));
  }
  return r;
}

int exit_code_for(const std::vector<SuiteReport>& reports) {
  bool aborted = false;
  for (const auto& r : reports) {
    if (r.failed > 0) return 1;
    if (r.aborted > 0) aborted = true;
  }
  return aborted ? 2 : 0;
}

}  // namespace semihall
