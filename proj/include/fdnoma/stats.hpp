#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace fdnoma {

/// Neumaier-compensated running sum; adding in a fixed order gives a
/// reproducible result.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct MeanCi {
  double mean = 0.0;
  double ci_half = 0.0;
  double stddev = 0.0;
  std::size_t n = 0;
};

/// Sample mean and 1.96 s / sqrt(n) with the n - 1 sample deviation, both
/// reduced in index order. One sample gives a zero half-width.
MeanCi mean_ci(std::span<const double> samples);

/// Worker count: FDNOMA_THREADS if set and positive, hardware concurrency
/// for 0 or unset.
std::size_t worker_count();

/// Calls body(i) for i in [0, n) across worker_count() threads. body must be
/// safe to call concurrently for distinct i. The first exception thrown is
/// rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fdnoma
