#ifndef PTQ_RANDOM_HPP
#define PTQ_RANDOM_HPP

#include <cstdint>

namespace ptq {

// splitmix64 stream. All randomness in the project flows through this so
// that identical seeds give identical output bytes on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n). Modulo bias is irrelevant for test-data
  // generation and keeps the stream portable.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace ptq

#endif
