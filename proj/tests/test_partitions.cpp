#include <doctest.h>

#include <functional>
#include <set>

#include "mcqc/partitions.hpp"
#include "mcqc/qseries.hpp"
#include "mcqc/schur.hpp"

using namespace mcqc;

namespace {

// p(n) by the k-largest-part recursion.
long partition_count(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partition_count(n - k, k) + partition_count(n, k - 1);
}

// Plane partitions as 3D stacks, counted by filling a box cell by cell with
// heights bounded by the left and upper neighbors.
long brute_plane_partitions(int v) {
  const int B = v;  // a volume-v plane partition fits in a v-by-v base
  std::vector<std::vector<int>> h(B, std::vector<int>(B, 0));
  long count = 0;
  std::function<void(int, int)> rec = [&](int cell, int left) {
    if (left == 0) {
      ++count;
      return;
    }
    if (cell == B * B) return;
    const int i = cell / B, j = cell % B;
    int cap = left;
    if (i > 0) cap = std::min(cap, h[i - 1][j]);
    if (j > 0) cap = std::min(cap, h[i][j - 1]);
    for (int x = 0; x <= cap; ++x) {
      h[i][j] = x;
      if (x == 0) {
        // Zero here forces zeros to the right in this row; jump to next row.
        const int next = (i + 1) * B;
        rec(next, left);
      } else {
        rec(cell + 1, left - x);
      }
    }
    h[i][j] = 0;
  };
  rec(0, v);
  return count;
}

Scalar dim_over_factorial_by_syt(const Partition& lam) {
  std::function<long(std::vector<int>)> syt = [&](std::vector<int> p) -> long {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return 1;
    long t = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
      auto r = p;
      --r[i];
      t += syt(r);
    }
    return t;
  };
  return Scalar(syt(lam.parts())) / factorial(lam.size());
}

}  // namespace

TEST_CASE("partition enumeration matches p(n)") {
  for (int n = 0; n <= 12; ++n) CHECK(static_cast<long>(partitions_of(n).size()) == partition_count(n, n));
  auto all = enumerate_partitions(4);
  REQUIRE(all.size() == 12);
  CHECK(all[0].empty());
  CHECK(all[3] == Partition({1, 1}));
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
}

TEST_CASE("plane partitions against a box-filling count") {
  auto counts = count_plane_partitions(7);
  const std::vector<long long> known{1, 1, 3, 6, 13, 24, 48, 86};
  for (int v = 0; v <= 7; ++v) {
    CHECK(counts[v] == known[v]);
    CHECK(counts[v] == brute_plane_partitions(v));
  }
  auto listed = enumerate_plane_partitions(5);
  CHECK(listed.size() == 1 + 1 + 3 + 6 + 13 + 24);
  auto mac = macmahon_series(7);
  for (int v = 0; v <= 7; ++v) CHECK(mac[v] == static_cast<long>(known[v]));
}

TEST_CASE("content and hook statistics") {
  CHECK(kappa(Partition({2})) == 2);
  CHECK(kappa(Partition({1, 1})) == -2);
  CHECK(kappa(Partition({3, 1})) == 2 * (0 + 1 + 2 - 1));
  CHECK(n_statistic(Partition({2, 1, 1})) == 0 + 1 + 2);
  auto h = hook_lengths(Partition({3, 1}));
  CHECK(h.at({1, 1}) == 4);
  CHECK(h.at({1, 2}) == 2);
  CHECK(h.at({2, 1}) == 1);
}

TEST_CASE("plancherel weight equals SYT count over n!") {
  for (const auto& lam : enumerate_partitions(7)) CHECK(plancherel_weight(lam) == dim_over_factorial_by_syt(lam));
}

TEST_CASE("principal specialization") {
  QParam qp(Scalar(2, 3));
  const Scalar q = qp.q();
  // s_(1) = h_1 = q^{1/2}/(1-q)
  CHECK(schur_principal(Partition({1}), qp) == qp.q_half_pow(1) / (1 - q));
  CHECK(schur_principal(Partition(), qp) == 1);
  // hook formula against Jacobi-Trudi
  for (const auto& lam : enumerate_partitions(6)) {
    CHECK(schur_principal(lam, qp) == skew_schur_principal(lam, Partition(), qp));
  }
  // s_(1,1)(q^{-ρ}) = e_2 = q^2/((1-q)(1-q^2)) by direct summation q^{(i-1/2)+(j-1/2)}, i<j
  CHECK(schur_principal(Partition({1, 1}), qp) == q * q / ((1 - q) * (1 - qp.q_pow(2))));
  CHECK(skew_schur_principal(Partition({1}), Partition({2}), qp) == 0);
}

TEST_CASE("schur squares sum to the MacMahon function") {
  const int V = 8;
  IntQSeries sum(V + 1, Integer(0));
  for (const auto& lam : enumerate_partitions(V)) {
    auto t = schur_square_qseries(lam, V);
    for (int d = 0; d <= V; ++d) sum[d] += t[d];
  }
  CHECK(sum == macmahon_series(V));
}

TEST_CASE("single-variable skew schur is a horizontal strip") {
  CHECK(skew_schur_single(Partition({3}), Partition({1})) == 2);
  CHECK_FALSE(skew_schur_single(Partition({1, 1}), Partition()).has_value());
  CHECK(skew_schur_single(Partition({2, 1}), Partition({1})) == 2);
}

TEST_CASE("potentials") {
  QParam qp(Scalar(2, 3));
  const Scalar q = qp.q();
  CHECK(phi_k(Partition({1}), 1, qp) == q - 1);
  CHECK(phi_k(Partition(), 3, qp) == 0);
  CHECK(phi4d_k(Partition({1}), 1) == 1);
  CHECK(phi4d_k(Partition({2, 1}), 2) == (4 - 0) + (0 - 1));
}
