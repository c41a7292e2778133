#pragma once

#include <array>
#include <string>

namespace mcqc::profile {

enum class Stage {
  PartitionEnumeration,
  SeriesMultiplication,
  RationalFunctions,
  FockOperators,
  RSeries,
  Other,
  kCount,
};

inline constexpr std::size_t kStageCount = static_cast<std::size_t>(Stage::kCount);

const char* stage_name(Stage stage);

void set_enabled(bool on);
bool enabled();
void reset();

// Exclusive seconds per stage: nested scopes pause their parent.
std::array<double, kStageCount> snapshot();

class Scope {
 public:
  explicit Scope(Stage stage);
  ~Scope();
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  bool active_;
};

}  // namespace mcqc::profile
