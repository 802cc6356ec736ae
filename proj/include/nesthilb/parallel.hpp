#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace nesthilb {

/// Sums zero + fn(0) + ... + fn(count - 1) over up to `jobs` threads. Each
/// worker takes a contiguous block starting from `zero`; partial sums are
/// combined in block order. The first exception thrown by any worker is
/// rethrown.
template <typename T, typename Fn>
T parallel_sum(std::size_t count, unsigned jobs, const T& zero, Fn fn) {
  T init = zero;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) init += fn(i);
    return init;
  }
  std::vector<T> partial(jobs, zero);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  const std::size_t block = (count + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(count, lo + block);
        for (std::size_t i = lo; i < hi; ++i) partial[w] += fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& p : partial) init += p;
  return init;
}

}  // namespace nesthilb
