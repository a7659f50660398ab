#pragma once

#include <cstdint>
#include <random>

namespace dp2 {

// mt19937_64 has a fully specified output sequence; the range mapping here is
// fixed too, so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }
  bool coin() { return gen_() & 1u; }
  std::uint64_t derive(std::uint64_t salt) { return gen_() ^ (salt * 0x9E3779B97F4A7C15ULL); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace dp2
