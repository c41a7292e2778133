#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mcqc {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  // Throws Precondition unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }
  // λ_i with 1-based i; zero past the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  Partition conjugate() const;
  // Containment of Young diagrams.
  bool contains(const Partition& mu) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  // Graded order: by size, then lexicographically descending within a size.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    return b.parts_ <=> a.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Plane partition stored as its rows; each row is a partition and rows
/// decrease entrywise going down.
struct PlanePartition {
  std::vector<std::vector<int>> rows;
  int volume() const;
};

/// Every partition of size <= max_size, graded then lexicographically
/// descending: [], [1], [2], [1,1], [3], [2,1], [1,1,1], ...
std::vector<Partition> enumerate_partitions(int max_size);
std::vector<Partition> partitions_of(int n);

/// Every plane partition of volume <= max_volume, by depth-first extension.
std::vector<PlanePartition> enumerate_plane_partitions(int max_volume);
// counts[v] = number of plane partitions of volume v, without materializing them.
std::vector<long long> count_plane_partitions(int max_volume);

// 2 * sum over cells (i,j) of (j - i).
int kappa(const Partition& lambda);
// sum_i (i-1) λ_i
int n_statistic(const Partition& lambda);
// Hook length of every cell, keyed by 1-based (row, column).
std::map<std::pair<int, int>, int> hook_lengths(const Partition& lambda);

}  // namespace mcqc
