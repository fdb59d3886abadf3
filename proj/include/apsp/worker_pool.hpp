#pragma once

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <string_view>
#include <thread>
#include <vector>

namespace apsp {

/// Core-binding policy for pool threads. Best effort: where affinity control
/// is unavailable the request is ignored with a warning on stderr.
enum class Pinning {
  None,
  Spread,   // spread workers evenly over the allowed CPUs
  Compact,  // fill allowed CPUs in order
};

std::string_view to_string(Pinning p) noexcept;
Pinning parse_pinning(std::string_view name);

/// Number of hardware threads available to the process (at least 1).
unsigned default_worker_count() noexcept;

/// Fixed set of worker threads executing fork-join jobs. run() hands the
/// same callable to every worker (with its index) and blocks until all of
/// them return.
class WorkerPool {
 public:
  explicit WorkerPool(unsigned workers = default_worker_count(), Pinning pinning = Pinning::None);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  unsigned size() const noexcept { return static_cast<unsigned>(threads_.size()); }
  Pinning pinning() const noexcept { return pinning_; }
  /// False when a pinning request could not be honoured.
  bool pinning_applied() const noexcept { return pinning_applied_; }

  /// Rethrows the first exception raised by any worker.
  void run(const std::function<void(unsigned)>& job);

 private:
  void worker_loop(unsigned index);

  Pinning pinning_;
  bool pinning_applied_ = true;
  std::mutex mu_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  const std::function<void(unsigned)>* job_ = nullptr;
  std::uint64_t generation_ = 0;
  unsigned pending_ = 0;
  bool stop_ = false;
  std::exception_ptr failure_;
  std::vector<std::thread> threads_;
};

}  // namespace apsp
