#include "mcqc/partitions.hpp"

#include <functional>

#include "mcqc/exact.hpp"
#include "mcqc/profile.hpp"

namespace mcqc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorKind::Precondition, "partition parts must be positive and weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++c[j];
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) > part(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

int PlanePartition::volume() const {
  int v = 0;
  for (const auto& r : rows) {
    for (int x : r) v += x;
  }
  return v;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // Parts chosen largest-first, so output is lexicographically descending.
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> enumerate_partitions(int max_size) {
  profile::Scope scope(profile::Stage::PartitionEnumeration);
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

// Calls visit(row) for every row of total <= budget bounded entrywise by cap.
void each_row(const std::vector<int>& cap, int budget, std::vector<int>& row,
              const std::function<void(const std::vector<int>&, int)>& visit, int used = 0) {
  std::size_t j = row.size();
  if (!row.empty()) visit(row, used);
  if (j >= cap.size()) return;
  int hi = std::min(cap[j], budget - used);
  if (!row.empty()) hi = std::min(hi, row.back());
  for (int v = hi; v >= 1; --v) {
    row.push_back(v);
    each_row(cap, budget, row, visit, used + v);
    row.pop_back();
  }
}

void extend(std::vector<std::vector<int>>& rows, int budget,
            const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  emit(rows);
  std::vector<int> cap = rows.empty() ? std::vector<int>(budget, budget) : rows.back();
  std::vector<int> row;
  each_row(cap, budget, row, [&](const std::vector<int>& r, int used) {
    rows.push_back(r);
    extend(rows, budget - used, emit);
    rows.pop_back();
  });
}

}  // namespace

std::vector<PlanePartition> enumerate_plane_partitions(int max_volume) {
  profile::Scope scope(profile::Stage::PartitionEnumeration);
  std::vector<PlanePartition> out;
  std::vector<std::vector<int>> rows;
  extend(rows, max_volume, [&](const std::vector<std::vector<int>>& r) { out.push_back(PlanePartition{r}); });
  return out;
}

std::vector<long long> count_plane_partitions(int max_volume) {
  profile::Scope scope(profile::Stage::PartitionEnumeration);
  std::vector<long long> counts(max_volume + 1, 0);
  std::vector<std::vector<int>> rows;
  extend(rows, max_volume, [&](const std::vector<std::vector<int>>& r) {
    int v = 0;
    for (const auto& row : r) {
      for (int x : row) v += x;
    }
    ++counts[v];
  });
  return counts;
}

int kappa(const Partition& lambda) {
  int k = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) k += j - i;
  }
  return 2 * k;
}

int n_statistic(const Partition& lambda) {
  int n = 0;
  for (int i = 1; i <= lambda.length(); ++i) n += (i - 1) * lambda.part(i);
  return n;
}

std::map<std::pair<int, int>, int> hook_lengths(const Partition& lambda) {
  Partition c = lambda.conjugate();
  std::map<std::pair<int, int>, int> h;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) h[{i, j}] = (lambda.part(i) - j) + (c.part(j) - i) + 1;
  }
  return h;
}

}  // namespace mcqc
