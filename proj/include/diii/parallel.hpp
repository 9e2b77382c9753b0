#ifndef DIII_PARALLEL_HPP
#define DIII_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace diii {

/// Worker count used by the batch operations. 0 means hardware concurrency.
void set_thread_count(unsigned k);
unsigned thread_count();

/// Calls body(k) for k in [0, count) on up to thread_count() threads. Each
/// index is visited exactly once; the caller is responsible for writing
/// results to disjoint slots.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < count; k += workers) body(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace diii

#endif  // DIII_PARALLEL_HPP
