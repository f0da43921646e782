#include "edl/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edl {

namespace {

const double kPi = std::acos(-1.0);

uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(uint64_t seed, uint64_t shard)
    : key_(mix64(mix64(seed) ^ (shard * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull))) {}

uint64_t CounterRng::next_u64() { return mix64(key_ ^ mix64(counter_++)); }

double CounterRng::next_u01() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::next_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u = next_u01(), v = next_u01();
  double r = std::sqrt(-2.0 * std::log(u));
  have_spare_ = true;
  spare_ = r * std::sin(2.0 * kPi * v);
  return r * std::cos(2.0 * kPi * v);
}

IntegralEstimate run_monte_carlo(const McOptions& opts,
                                 double (*kernel)(CounterRng&, const void*),
                                 const void* payload, double scale) {
  if (opts.samples < 1) throw std::invalid_argument("monte carlo: samples must be positive");
  if (opts.shards < 1) throw std::invalid_argument("monte carlo: shards must be positive");

  const long long per_shard = opts.samples / opts.shards;
  const long long remainder = opts.samples % opts.shards;
  std::vector<double> shard_sums, shard_sq;
  shard_sums.reserve(opts.shards);
  shard_sq.reserve(opts.shards);
  for (int s = 0; s < opts.shards; ++s) {
    CounterRng rng(opts.seed, static_cast<uint64_t>(s));
    long long n = per_shard + (s < remainder ? 1 : 0);
    double sum = 0.0, sq = 0.0;
    for (long long i = 0; i < n; ++i) {
      double v = kernel(rng, payload);
      sum += v;
      sq += v * v;
    }
    shard_sums.push_back(sum);
    shard_sq.push_back(sq);
  }

  // pairwise reduction of the shard partials
  auto pairwise = [](std::vector<double> v) {
    while (v.size() > 1) {
      std::vector<double> next;
      for (size_t i = 0; i + 1 < v.size(); i += 2) next.push_back(v[i] + v[i + 1]);
      if (v.size() % 2) next.push_back(v.back());
      v = std::move(next);
    }
    return v.empty() ? 0.0 : v[0];
  };
  const double total = pairwise(shard_sums);
  const double total_sq = pairwise(shard_sq);
  const double n = static_cast<double>(opts.samples);
  const double mean = total / n;
  double var = std::max(0.0, (total_sq - n * mean * mean) / std::max(1.0, n - 1.0));
  double se = std::sqrt(var / n);

  return {mean * scale, se * std::abs(scale), opts.samples, EstimateMethod::monte_carlo,
          opts.seed};
}

namespace {

struct SinPayload {
  const std::vector<SinForm>* forms;
  int rank;
  const std::vector<int>* highest;  // null for box sampling
};

double sin_product(const std::vector<SinForm>& forms, const std::vector<double>& s) {
  double prod = 1.0;
  for (const auto& f : forms) {
    double arg = 0.0;
    for (size_t i = 0; i < s.size(); ++i) arg += f.n[i] * s[i];
    double v = std::abs(std::sin(arg));
    prod *= std::pow(v, f.w);
    if (prod == 0.0) break;
  }
  return prod;
}

double box_kernel(CounterRng& rng, const void* payload) {
  const auto& p = *static_cast<const SinPayload*>(payload);
  std::vector<double> s(p.rank);
  for (int i = 0; i < p.rank; ++i) s[i] = kPi * rng.next_u01();
  return sin_product(*p.forms, s);
}

double region_kernel(CounterRng& rng, const void* payload) {
  const auto& p = *static_cast<const SinPayload*>(payload);
  // uniform point of {y >= 0, sum y <= pi} from sorted-uniform spacings,
  // then s_i = y_i / highest_i
  std::vector<double> u(p.rank);
  for (int i = 0; i < p.rank; ++i) u[i] = rng.next_u01();
  std::sort(u.begin(), u.end());
  std::vector<double> s(p.rank);
  double prev = 0.0;
  for (int i = 0; i < p.rank; ++i) {
    s[i] = kPi * (u[i] - prev) / (*p.highest)[i];
    prev = u[i];
  }
  return sin_product(*p.forms, s);
}

}  // namespace

IntegralEstimate box_sin_mc(const std::vector<SinForm>& forms, int rank, McOptions opts) {
  SinPayload payload{&forms, rank, nullptr};
  double volume = std::pow(kPi, rank);
  return run_monte_carlo(opts, box_kernel, &payload, volume);
}

IntegralEstimate region_sin_mc(const std::vector<SinForm>& forms,
                               const std::vector<int>& highest, int rank, McOptions opts) {
  SinPayload payload{&forms, rank, &highest};
  double volume = std::pow(kPi, rank);
  double nfact = 1.0;
  for (int i = 1; i <= rank; ++i) nfact *= i;
  for (int c : highest) volume /= c;
  volume /= nfact;
  return run_monte_carlo(opts, region_kernel, &payload, volume);
}

}  // namespace edl
