#pragma once

#include <cstdint>

namespace negaspec {

// Counter-based generator (SplitMix64 finalizer in counter mode). A given
// (seed, stream) pair reproduces the same sequence bit-for-bit regardless
// of call sites, which keeps Monte Carlo results replayable from the seeds
// recorded in result records.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(seed ^ (stream * 0x9e3779b97f4a7c15ULL)) {}

    std::uint64_t next_u64() {
        std::uint64_t z = key_ + (++ctr_) * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

} // namespace negaspec
