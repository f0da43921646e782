#pragma once

#include "edl/quadrature.hpp"

#include <cstdint>
#include <vector>

namespace edl {

// Counter-based stream: output j of stream (seed, shard) is a fixed mixing
// function of (seed, shard, j), so results depend only on the (seed, shards)
// pair, not on evaluation order or thread count.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t shard);
  uint64_t next_u64();
  double next_u01();      // in (0, 1)
  double next_normal();   // standard normal, Box-Muller
 private:
  uint64_t key_;
  uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct McOptions {
  uint64_t seed = 42;
  int shards = 8;
  long long samples = 100000;
};

// Mean of f over iid samples drawn per shard; the estimate and its standard
// error are combined shard-by-shard with pairwise summation.
struct McAccumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  long long count = 0;
};

IntegralEstimate run_monte_carlo(const McOptions& opts,
                                 double (*kernel)(CounterRng&, const void*),
                                 const void* payload, double scale);

// integral over [0, pi]^rank of prod |sin(n . s)|^w by uniform sampling.
IntegralEstimate box_sin_mc(const std::vector<SinForm>& forms, int rank, McOptions opts);

// integral over the simplex {s >= 0, highest . s <= pi} of prod sin^w.
IntegralEstimate region_sin_mc(const std::vector<SinForm>& forms,
                               const std::vector<int>& highest, int rank, McOptions opts);

}  // namespace edl
