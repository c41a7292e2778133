#include "mcqc/profile.hpp"

#include <atomic>
#include <chrono>
#include <vector>

namespace mcqc::profile {

namespace {

using Clock = std::chrono::steady_clock;

std::atomic<bool> g_enabled{false};
std::array<std::atomic<long long>, kStageCount> g_nanos{};

struct Frame {
  Stage stage;
  Clock::time_point resumed;
};

thread_local std::vector<Frame> t_stack;

void charge(const Frame& frame, Clock::time_point now) {
  auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(now - frame.resumed).count();
  g_nanos[static_cast<std::size_t>(frame.stage)].fetch_add(ns, std::memory_order_relaxed);
}

}  // namespace

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::PartitionEnumeration: return "partition_enumeration";
    case Stage::SeriesMultiplication: return "series_multiplication";
    case Stage::RationalFunctions: return "rational_functions";
    case Stage::FockOperators: return "fock_operators";
    case Stage::RSeries: return "r_series";
    case Stage::Other: return "other";
    case Stage::kCount: break;
  }
  return "unknown";
}

void set_enabled(bool on) { g_enabled.store(on); }
bool enabled() { return g_enabled.load(std::memory_order_relaxed); }

void reset() {
  for (auto& n : g_nanos) n.store(0);
}

std::array<double, kStageCount> snapshot() {
  std::array<double, kStageCount> out{};
  for (std::size_t i = 0; i < kStageCount; ++i) out[i] = static_cast<double>(g_nanos[i].load()) * 1e-9;
  return out;
}

Scope::Scope(Stage stage) : active_(enabled()) {
  if (!active_) return;
  auto now = Clock::now();
  if (!t_stack.empty()) charge(t_stack.back(), now);
  t_stack.push_back({stage, now});
}

Scope::~Scope() {
  if (!active_) return;
  auto now = Clock::now();
  charge(t_stack.back(), now);
  t_stack.pop_back();
  if (!t_stack.empty()) t_stack.back().resumed = now;
}

}  // namespace mcqc::profile
