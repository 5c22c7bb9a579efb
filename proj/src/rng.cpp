#include "langnet/rng.hpp"

#include "langnet/error.hpp"

namespace langnet {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
}

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

std::uint64_t Rng::next_u64() { return mix64(seed_ + (++counter_) * kGamma); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw InvalidArgumentError("uniform_int: hi < lo");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  return lo + static_cast<int>(next_u64() % span);
}

Rng Rng::fork(std::uint64_t tag) const {
  return Rng(mix64(seed_ ^ mix64(tag + 0x632BE59BD9B4E019ull)));
}

}  // namespace langnet
