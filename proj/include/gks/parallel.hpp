#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace gks {

/// Runs fn(k) for k in [0, n) on up to `workers` threads with static
/// contiguous chunks. Each k must write only its own outputs; the first
/// exception thrown by any chunk is rethrown after all threads join.
template <class Fn>
void parallel_for(int n, int workers, const Fn& fn)
{
  workers = std::clamp(workers, 1, std::max(1, n));
  if (workers == 1) {
    for (int k = 0; k < n; ++k) fn(k);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const int lo = static_cast<int>(static_cast<long long>(n) * w / workers);
    const int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
    threads.emplace_back([&, lo, hi, w] {
      try {
        for (int k = lo; k < hi; ++k) fn(k);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace gks
