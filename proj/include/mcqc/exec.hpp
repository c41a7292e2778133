#pragma once

#include <exception>
#include <limits>

namespace mcqc {

// Kernels take an execution policy so the serial path stays available as the
// reference the OpenMP path is checked and benchmarked against.
enum class Exec { Serial, Parallel };

/// body(i) for 0 <= i < n. Under Parallel the iterations are spread over
/// OpenMP threads; an exception cannot leave a parallel region, so the one
/// from the lowest index is kept and rethrown afterwards, which is also what
/// the serial loop would have thrown.
template <class F>
void parallel_for(long n, Exec exec, F&& body) {
  if (exec == Exec::Serial || n < 2) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first;
  long first_index = std::numeric_limits<long>::max();
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(mcqc_parallel_for_error)
      if (i < first_index) {
        first_index = i;
        first = std::current_exception();
      }
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace mcqc
