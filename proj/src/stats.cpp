#include "fdnoma/stats.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "fdnoma/errors.hpp"

namespace fdnoma {

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

MeanCi mean_ci(std::span<const double> samples) {
  if (samples.empty()) throw ValidationError("mean_ci: no samples");
  MeanCi out;
  out.n = samples.size();
  CompensatedSum sum;
  for (double x : samples) sum.add(x);
  out.mean = sum.value() / static_cast<double>(out.n);
  if (out.n > 1) {
    CompensatedSum squares;
    for (double x : samples) squares.add((x - out.mean) * (x - out.mean));
    out.stddev = std::sqrt(squares.value() / static_cast<double>(out.n - 1));
    out.ci_half = 1.96 * out.stddev / std::sqrt(static_cast<double>(out.n));
  }
  return out;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("FDNOMA_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 0) {
      throw ValidationError("FDNOMA_THREADS: expected a non-negative integer, got '" +
                            std::string(env) + "'");
    }
    if (value > 0) return static_cast<std::size_t>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace fdnoma
