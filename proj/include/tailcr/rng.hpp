#pragma once

#include <cstdint>
#include <random>

namespace tailcr {

// splitmix64 finalizer. Used to spread replicate indices into independent
// seed space.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t replicate) {
  return master ^ mix64(replicate);
}

// Deterministic uniform stream on the open interval (0,1). mt19937_64 output
// is fully specified by the standard, so a given seed yields the same sequence
// on every platform; the 53-bit mapping keeps both endpoints excluded.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

  double next() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tailcr
