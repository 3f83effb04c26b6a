#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace finpot {

// mt19937_64 plus a rejection-sampled bounded draw. uniform_int_distribution
// and std::shuffle are implementation-defined, so seeded sampling goes through
// this to stay byte-stable across toolchains.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform draw in [0, n). n must be > 0.
    std::uint64_t bounded(std::uint64_t n);

  private:
    std::mt19937_64 engine_;
};

// Chooses n distinct indices from [0, population) via partial Fisher-Yates,
// returned in ascending order so callers can keep input ordering.
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t n,
                                        std::uint64_t seed);

}  // namespace finpot
