#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "wlab/error.hpp"

namespace wlab {

/// Worker cap from WLAB_THREADS; 0 or unset means hardware concurrency.
inline unsigned thread_count_from_env() {
  unsigned requested = 0;
  if (const char* env = std::getenv("WLAB_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw InputError(std::string("WLAB_THREADS must be a nonnegative integer, got '") + env + "'");
    requested = static_cast<unsigned>(v);
  }
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

/// Evaluates task(i) for i in [0, n) on up to `threads` workers and folds the
/// results in index order, so the outcome does not depend on scheduling.
template <typename Result, typename Task, typename Fold>
Result parallel_reduce(std::size_t n, unsigned threads, Result init, Task task, Fold fold) {
  std::vector<Result> partial(n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) partial[i] = task(i);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += threads) partial[i] = task(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto& p : partial) init = fold(std::move(init), std::move(p));
  return init;
}

}  // namespace wlab
