#include "apsp/worker_pool.hpp"

#include <iostream>
#include <string>
#include <system_error>
#include <utility>

#include "apsp/error.hpp"

#if defined(__linux__)
#include <pthread.h>
#include <sched.h>
#endif

namespace apsp {

std::string_view to_string(Pinning p) noexcept {
  switch (p) {
    case Pinning::None: return "none";
    case Pinning::Spread: return "spread";
    case Pinning::Compact: return "compact";
  }
  return "none";
}

Pinning parse_pinning(std::string_view name) {
  if (name == "none") return Pinning::None;
  if (name == "spread") return Pinning::Spread;
  if (name == "compact") return Pinning::Compact;
  throw Error(Errc::Config, "unknown pinning \"" + std::string(name) + "\" (expected none, spread or compact)");
}

unsigned default_worker_count() noexcept {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

#if defined(__linux__)
std::vector<int> allowed_cpus() {
  std::vector<int> cpus;
  cpu_set_t set;
  CPU_ZERO(&set);
  if (sched_getaffinity(0, sizeof set, &set) != 0) return cpus;
  for (int c = 0; c < CPU_SETSIZE; ++c)
    if (CPU_ISSET(c, &set)) cpus.push_back(c);
  return cpus;
}

bool pin_thread(std::thread& t, int cpu) {
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(cpu, &set);
  return pthread_setaffinity_np(t.native_handle(), sizeof set, &set) == 0;
}
#endif

bool apply_pinning(std::vector<std::thread>& threads, Pinning policy) {
  if (policy == Pinning::None) return true;
#if defined(__linux__)
  const std::vector<int> cpus = allowed_cpus();
  if (cpus.empty()) return false;
  bool ok = true;
  const std::size_t workers = threads.size();
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t slot = policy == Pinning::Spread ? (w * cpus.size() / workers) % cpus.size() : w % cpus.size();
    ok = pin_thread(threads[w], cpus[slot]) && ok;
  }
  return ok;
#else
  (void)threads;
  return false;
#endif
}

}  // namespace

WorkerPool::WorkerPool(unsigned workers, Pinning pinning) : pinning_(pinning) {
  if (workers == 0) throw Error(Errc::Config, "worker count must be at least 1");
  try {
    threads_.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads_.emplace_back([this, w] { worker_loop(w); });
  } catch (const std::system_error& e) {
    {
      std::lock_guard lock(mu_);
      stop_ = true;
    }
    start_cv_.notify_all();
    for (auto& t : threads_) t.join();
    throw Error(Errc::Resource, std::string("cannot start worker threads: ") + e.what());
  }
  pinning_applied_ = apply_pinning(threads_, pinning_);
  if (!pinning_applied_)
    std::cerr << "warning: pinning policy '" << to_string(pinning_) << "' not supported here; ignored\n";
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard lock(mu_);
    stop_ = true;
  }
  start_cv_.notify_all();
  for (auto& t : threads_) t.join();
}

void WorkerPool::run(const std::function<void(unsigned)>& job) {
  std::unique_lock lock(mu_);
  job_ = &job;
  failure_ = nullptr;
  pending_ = size();
  ++generation_;
  start_cv_.notify_all();
  done_cv_.wait(lock, [this] { return pending_ == 0; });
  job_ = nullptr;
  if (failure_) std::rethrow_exception(std::exchange(failure_, nullptr));
}

void WorkerPool::worker_loop(unsigned index) {
  std::uint64_t seen = 0;
  for (;;) {
    const std::function<void(unsigned)>* job = nullptr;
    {
      std::unique_lock lock(mu_);
      start_cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
      job = job_;
    }
    std::exception_ptr error;
    try {
      (*job)(index);
    } catch (...) {
      error = std::current_exception();
    }
    std::lock_guard lock(mu_);
    if (error && !failure_) failure_ = error;
    if (--pending_ == 0) done_cv_.notify_one();
  }
}

}  // namespace apsp
